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
#![no_main]

use libfuzzer_sys::fuzz_target;
use turan_reg::graph6;

// Decoding either fails cleanly or yields a graph that encodes back to the
// same text.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = graph6::decode(text) {
        assert!(g.is_well_formed());
        let body = text.trim_end_matches(['\n', '\r']);
        let body = body.strip_prefix(">>graph6<<").unwrap_or(body);
        assert_eq!(graph6::encode(&g), body);
    }
});
