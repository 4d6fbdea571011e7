use std::path::PathBuf;
use std::process::Command;

const CASES: &[(&str, &[&str])] = &[
    ("eigenform_x3_minus_x", &["eigenform", "x^3-x"]),
    ("eigenform_scaled", &["eigenform", "2*x^4+2*x^2"]),
    ("eigenform_json", &["--format", "json", "eigenform", "x^6+x^3"]),
    ("eigengroup_q", &["eigengroup", "x^3-x"]),
    ("eigengroup_zeta3", &["--field", "Q(zeta_3)", "eigengroup", "x^3-1"]),
    ("eigengroup_torus", &["eigengroup", "(x-1)^3"]),
    ("eigengroup_json", &["--format", "json", "--field", "Q(zeta_4)", "eigengroup", "x^5-x"]),
    ("aut_x3_minus_x", &["aut", "x^3-x"]),
    ("aut_torus", &["aut", "x^2"]),
    ("aut_zero", &["aut", "0"]),
    ("aut_weyl", &["aut", "1"]),
    ("aut_json", &["--format", "json", "aut", "x^2-1"]),
    ("iso_equivalent", &["iso", "x^2-1", "4*x^2-4*x"]),
    ("iso_self", &["iso", "x^3-x", "x^3-x"]),
    ("iso_inequivalent", &["iso", "x^3-x", "x^3-2*x+1"]),
    ("iso_torus", &["iso", "x^2", "3*(x+1)^2"]),
    ("iso_json", &["--format", "json", "iso", "x^2-1", "4*x^2-4*x"]),
    ("mul", &["mul", "x^2", "y", "x"]),
    ("mul_zeta", &["--field", "Q(zeta_3)", "mul", "x^3-1", "zeta*y", "x^2"]),
    ("mul_json", &["--format", "json", "mul", "x^3-x", "y^2", "x"]),
    ("commutator", &["commutator", "x^3-x", "y", "x"]),
    ("commutator_json", &["--format", "json", "commutator", "x^2", "y^2", "x^2"]),
    ("apply", &["apply", "x^3-x", "-1", "0", "0", "y*x"]),
    ("apply_json", &["--format", "json", "apply", "x^2", "2", "0", "x", "y^2"]),
    ("embed", &["embed", "x^2", "y"]),
    ("embed_json", &["--format", "json", "embed", "x^3-x", "y^2"]),
    ("spec", &["spec", "x^3-x"]),
    ("spec_symbolic", &["spec", "x^3+x"]),
    ("spec_json", &["--format", "json", "spec", "x^2*(x-1)"]),
    ("char", &["char", "x^3-x", "1", "5", "y*x"]),
    ("char_json", &["--format", "json", "char", "x^2", "0", "3", "y^2+x"]),
    ("error_syntax", &["eigenform", "x^^2"]),
    ("error_constant", &["eigenform", "3"]),
    ("error_no_character", &["char", "x^2", "1", "0", "y"]),
    ("error_field", &["--field", "Q(zeta_3)", "iso", "x^2", "x^2"]),
    ("error_unknown_verb", &["frobnicate", "x"]),
];

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_orext")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn render(args: &[&str]) -> String {
    let (status, stdout, stderr) = run(args);
    let mut s = format!("$ orext {}\nstatus: {status}\n{stdout}", args.join(" "));
    if !stderr.is_empty() {
        // clap usage text varies with version; keep the first line only.
        s.push_str("--- stderr\n");
        s.push_str(stderr.lines().next().unwrap());
        s.push('\n');
    }
    s
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.out"))
}

#[test]
fn goldens() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut mismatches = Vec::new();
    for (name, args) in CASES {
        let actual = render(args);
        let path = golden_path(name);
        if update {
            std::fs::write(&path, &actual).unwrap();
            continue;
        }
        let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
        if expected != actual {
            mismatches.push(format!("{name}:\n--- expected\n{expected}--- actual\n{actual}"));
        }
    }
    assert!(mismatches.is_empty(), "{}", mismatches.join("\n"));
}

#[test]
fn every_verb_is_covered() {
    for verb in ["eigenform", "eigengroup", "aut", "iso", "mul", "commutator", "apply", "embed", "spec", "char"] {
        for format in ["text", "json"] {
            let hit = CASES
                .iter()
                .any(|(_, args)| args.contains(&verb) && args.contains(&"json") == (format == "json"));
            assert!(hit, "{verb} {format}");
        }
    }
}

#[test]
fn json_is_byte_stable() {
    for (_, args) in CASES.iter().filter(|(_, a)| a.contains(&"json")) {
        let first = run(args);
        assert_eq!(first.0, 0);
        serde_json::from_str::<serde_json::Value>(&first.1).unwrap();
        for _ in 0..3 {
            assert_eq!(run(args), first);
        }
    }
}

#[test]
fn statuses() {
    assert_eq!(run(&["eigenform", "x^^2"]).0, 2);
    assert_eq!(run(&["eigenform", "3"]).0, 1);
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&[]).0, 2);
}
