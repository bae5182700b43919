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
use std::process::{Command, Output};

fn turan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_turan-reg")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn table_csv_layout() {
    let o = turan(&["table", "--r", "4", "--from", "6", "--to", "8"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "n\\m,11,12,13,14,15,16\n6,7,8,,,,\n7,,8,7,7,,\n8,,,,8,8,8\n");
}

#[test]
fn table_json_keys_cells_by_order_and_size() {
    let o = turan(&["table", "--format", "json"]);
    let v = json(&o);
    let cells = v["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 8);
    assert!(cells.iter().any(|c| c["n"] == 7 && c["m"] == 13 && c["max_k3"] == 7));
    assert_eq!(v["has_reference"], true);
    let o = turan(&["table", "--r", "5", "--from", "7", "--to", "8", "--format", "json"]);
    assert_eq!(json(&o)["note"], "no paper reference");
    assert!(!turan(&["table", "--from", "6", "--to", "13"]).status.success());
}

#[test]
fn suite_exit_status() {
    let o = turan(&["suite", "table1"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["passed"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 8);
    let log = String::from_utf8(o.stderr).unwrap();
    assert_eq!(log.lines().filter(|l| l.starts_with("[PAPER] PASS")).count(), 8);

    let dir = std::env::temp_dir().join(format!("turan-reg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.toml");
    std::fs::write(
        &path,
        "[[suite]]\nid = \"x\"\n[[suite.check]]\nname = \"c\"\nprovenance = \"DERIVED\"\nop = { kind = \"ex-c5\", r = 6 }\nexpect = { value = 1 }\n",
    )
    .unwrap();
    let o = turan(&["suite", "x", "--manifest", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!turan(&["suite", "nope"]).status.success());
}

#[test]
fn construct_outputs_and_certificate() {
    let dir = std::env::temp_dir().join(format!("turan-reg-cert-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cert = dir.join("c.json");
    let o = turan(&["construct", "pentagon-blowup", "--n", "25", "--certify", "--certificate", cert.to_str().unwrap()]);
    assert!(o.status.success());
    let g = turan_reg::graph6::decode(stdout(&o).trim()).unwrap();
    assert_eq!(g.regular_degree(), Some(10));
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(doc["recipe"]["name"], "pentagon-blowup");
    assert!(doc["certificate"]["cycle_map"].is_array());

    let o = turan(&["construct", "kbe", "--x", "1", "--y", "1", "--out", "edges"]);
    let g = turan_reg::edgelist::parse(&stdout(&o)).unwrap();
    assert_eq!((g.order(), g.size()), (3, 3));

    let o = turan(&["construct", "star-forest-complement", "--n", "10", "--parts", "1,1,1,1,1"]);
    assert_eq!(turan_reg::graph6::decode(stdout(&o).trim()).unwrap().regular_degree(), Some(8));
    assert_eq!(turan(&["construct", "pentagon-blowup", "--n", "13"]).status.code(), Some(2));
}

#[test]
fn enumerate_streams_graph6() {
    let o = turan(&["enumerate", "--n", "6"]);
    assert_eq!(stdout(&o).lines().count(), 156);
    let o = turan(&["enumerate", "--n", "8", "--regular-k", "3", "--connected"]);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 5);
    for l in &lines {
        assert_eq!(turan_reg::graph6::decode(l).unwrap().regular_degree(), Some(3));
    }
    let o = turan(&["enumerate", "--n", "7", "--max-degree", "3", "--forbid", "K3"]);
    for l in stdout(&o).lines() {
        let g = turan_reg::graph6::decode(l).unwrap();
        assert!(g.max_degree() <= 3 && turan_reg::census::count_cliques(&g, 3) == 0);
    }
    assert!(!turan(&["enumerate", "--n", "12"]).status.success());
}

#[test]
fn searches_report_json() {
    let v = json(&turan(&["exr", "--n", "10"]));
    assert_eq!(v["objective"], 5);
    let w = turan_reg::graph6::decode(v["witnesses"][0].as_str().unwrap()).unwrap();
    assert_eq!(w.regular_degree(), Some(5));
    let v = json(&turan(&["exr", "--n", "7", "--h", "K3", "--closed-form"]));
    assert_eq!((v["value"].as_u64(), v["exact"].as_bool()), (Some(2), Some(true)));
    let v = json(&turan(&["census-triangles", "--n", "9", "--k", "4"]));
    assert_eq!((v["objective"].as_u64(), v["classes"].as_u64()), (Some(2), Some(1)));
    let v = json(&turan(&["max-cliques", "--n", "8", "--m", "18", "--r", "5", "--t", "3"]));
    assert_eq!(v["objective"], 16);
    let v = json(&turan(&["max-cliques", "--n", "8", "--m", "18", "--r", "5", "--total"]));
    assert_eq!(v["objective"], 22);
    let v = json(&turan(&["max-copies", "--n", "6", "--pattern", "S2", "--r", "3"]));
    assert_eq!((v["objective"].as_u64(), v["classes"].as_u64()), (Some(18), Some(2)));
    let v = json(&turan(&["--jobs", "1", "probe", "conj55", "--from", "9", "--to", "9"]));
    assert_eq!(v["discrepancies"], 0);
}

#[test]
fn enumeration_output_ignores_thread_count() {
    let one = stdout(&turan(&["--jobs", "1", "enumerate", "--n", "7"]));
    let three = stdout(&turan(&["--jobs", "3", "enumerate", "--n", "7"]));
    assert_eq!(one.lines().count(), 1044);
    assert_eq!(one, three);
}
