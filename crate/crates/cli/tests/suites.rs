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
use turan_reg_cli::manifest::{parse_manifest, Provenance, BUILTIN};
use turan_reg_cli::suite::run_suite;

const SEED: u64 = 0x7572_616e;

#[test]
fn every_builtin_suite_passes() {
    let m = parse_manifest(BUILTIN).unwrap();
    for s in &m.suites {
        let report = run_suite(&m, &s.id, SEED).unwrap();
        let failed: Vec<String> = report.checks.iter().filter(|c| !c.passed).map(|c| c.log_line()).collect();
        assert!(report.passed, "suite {} failed:\n{}", s.id, failed.join("\n"));
        assert_eq!(report.checks.len(), s.checks.len());
    }
}

#[test]
fn reports_keep_manifest_order_and_tags() {
    let m = parse_manifest(BUILTIN).unwrap();
    let report = run_suite(&m, "table1", SEED).unwrap();
    let names: Vec<&str> = report.checks.iter().map(|c| c.name.as_str()).collect();
    let expected: Vec<&str> = m.suite("table1").unwrap().checks.iter().map(|c| c.name.as_str()).collect();
    assert_eq!(names, expected);
    for c in &report.checks {
        assert!(c.log_line().starts_with("[PAPER] PASS"), "{}", c.log_line());
    }
    for s in &m.suites {
        for c in &s.checks {
            assert!(matches!(c.provenance, Provenance::Paper | Provenance::Derived | Provenance::Trivial));
        }
    }
}

#[test]
fn reports_are_stable() {
    let m = parse_manifest(BUILTIN).unwrap();
    let a = serde_json::to_string(&run_suite(&m, "examples", SEED).unwrap()).unwrap();
    let b = serde_json::to_string(&run_suite(&m, "examples", SEED).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn wrong_expectation_fails_the_suite() {
    let text = r#"
[[suite]]
id = "bad"
[[suite.check]]
name = "off by one"
provenance = "TRIVIAL"
op = { kind = "exr", n = 10, h = "K3" }
expect = { value = 6 }
[[suite.check]]
name = "right"
provenance = "TRIVIAL"
op = { kind = "exr", n = 10, h = "K3" }
expect = { value = 5 }
"#;
    let m = parse_manifest(text).unwrap();
    let r = run_suite(&m, "bad", 1).unwrap();
    assert!(!r.passed);
    assert!(!r.checks[0].passed && r.checks[1].passed);
    assert!(r.checks[0].log_line().starts_with("[TRIVIAL] FAIL off by one"));
    assert!(run_suite(&m, "missing", 1).is_err());
}

#[test]
fn fuzz_seed_manifests_parse() {
    let dir = std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus/manifest_parse");
    let mut n = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        let m = parse_manifest(&text).unwrap();
        assert!(!m.suites.is_empty());
        n += 1;
    }
    assert!(n > 0);
}
