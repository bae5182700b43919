// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//! graph6 encoding and decoding.
//!
//! The encoding is the standard one: a size prefix followed by the upper
//! triangle of the adjacency matrix in column order, six bits per printable
//! byte. Decoding is strict, so every accepted string re-encodes to itself:
//! the size prefix must be the shortest form and padding bits must be zero.

use crate::graph::{Graph, GraphError, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

fn err(msg: impl Into<String>) -> GraphError {
    GraphError::Graph6(msg.into())
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend_from_slice(&[126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize), GraphError> {
    let digits = |s: &[u8]| s.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    match bytes {
        [] => Err(err("empty input")),
        [126, 126, rest @ ..] => {
            let d = rest.get(..6).ok_or_else(|| err("truncated size"))?;
            let n = digits(d);
            if n <= 258_047 {
                return Err(err("non-minimal size prefix"));
            }
            Ok((n, 8))
        }
        [126, rest @ ..] => {
            let d = rest.get(..3).ok_or_else(|| err("truncated size"))?;
            let n = digits(d);
            if n <= 62 {
                return Err(err("non-minimal size prefix"));
            }
            Ok((n, 4))
        }
        [b, ..] => Ok(((b - 63) as usize, 1)),
    }
}

pub fn decode(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(err(format!("byte {b:#04x} outside the printable range 63..=126")));
    }
    let (n, offset) = decode_size(bytes)?;
    if n > MAX_ORDER {
        return Err(GraphError::UnsupportedOrder(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let body = &bytes[offset..];
    if body.len() != nbits.div_ceil(6) {
        return Err(err(format!(
            "expected {} data bytes for {n} vertices, found {}",
            nbits.div_ceil(6),
            body.len()
        )));
    }
    let pad = body.len() * 6 - nbits;
    if pad > 0 {
        let last = body[body.len() - 1] - 63;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err("non-zero padding bits"));
        }
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn decode_star() {
        // Column-wise bits 0000000000 1111 pack into '?' and '{'
        let g = decode("D?{").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(encode(&g), "D?{");
    }

    #[test]
    fn single_vertex_and_empty() {
        assert_eq!(encode(&Graph::empty(1)), "@");
        assert_eq!(encode(&Graph::empty(0)), "?");
        assert_eq!(decode("@").unwrap(), Graph::empty(1));
    }

    #[test]
    fn known_strings() {
        assert_eq!(encode(&named::complete(4)), "C~");
        assert_eq!(encode(&named::cycle(5)), "Dhc");
        // nauty's Petersen graph, under a different labelling
        let p = decode("IheA@GUAo").unwrap();
        assert_eq!(p.regular_degree(), Some(3));
        assert!(crate::canon::is_isomorphic(&p, &named::petersen()));
    }

    #[test]
    fn long_size_prefix() {
        let g = named::cycle(100);
        let s = encode(&g);
        assert!(s.starts_with("~?@c"));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn header_is_accepted() {
        assert_eq!(decode(">>graph6<<C~").unwrap(), named::complete(4));
    }

    #[test]
    fn malformed_inputs() {
        assert!(decode("").is_err());
        assert!(decode("D?").is_err());
        assert!(decode("D?{?").is_err());
        assert!(decode("D?|").is_err()); // padding bit set
        assert!(decode("C\x7f").is_err());
        assert!(decode("~??D").is_err()); // 5 vertices in the long form
        assert!(decode("~?").is_err());
    }
}
