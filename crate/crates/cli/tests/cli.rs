use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name)
}

fn braidx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidx"))
        .args(args)
        .env("BRAIDX_THREADS", "2")
        .output()
        .expect("braidx runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(name: &str) -> String {
    corpus(name).to_string_lossy().into_owned()
}

#[test]
fn validates_genus_one_example() {
    let o = braidx(&["dissection", "validate", &path("g1b2.dsc")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "Valid\n");
}

#[test]
fn invalid_dissection_exits_one() {
    let dir = std::env::temp_dir().join(format!("braidx-invalid-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("swapped.dsc");
    let text = std::fs::read_to_string(corpus("disk3.dsc")).unwrap();
    let swapped = format!(
        "{text}arcs 2\nstart=(2,1) letters=[] end=(3,1)\nstart=(1,0) letters=[] end=(2,1)\n"
    );
    std::fs::write(&file, swapped).unwrap();
    let o = braidx(&["dissection", "validate", &file.to_string_lossy()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("Invalid\n  order:"), "{}", stdout(&o));
}

#[test]
fn malformed_file_names_line_and_field() {
    let dir = std::env::temp_dir().join(format!("braidx-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("bad.hur");
    std::fs::write(&file, "3 2\n1 2\n2 x\n").unwrap();
    let o = braidx(&["hurwitz", "orbit", &file.to_string_lossy()]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 3") && err.contains("y"), "{err}");
}

#[test]
fn hurwitz_orbit_of_the_triple() {
    let o = braidx(&["hurwitz", "orbit", &path("m3n3.hur")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("orbit_size=8 complete=true\n"), "{out}");
    let o = braidx(&["hurwitz", "components", "3", "3"]);
    assert!(stdout(&o).starts_with("components=3\n"));
}

#[test]
fn counterexample_emits_witness() {
    let o = braidx(&["counterexample", "g1b2", "--depth", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("hurwitz_equal=true"));
    assert!(out.contains("twisted_reached=false"));
    assert!(out.trim_end().ends_with("certificate=witness"), "{out}");
}

#[test]
fn separation_certificates_and_exit_codes() {
    let o = braidx(&["orbit", "separate", &path("g1b2.dsc"), &path("g1b2-moved.dsc")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("certificate=path\n"));
    let o = braidx(&["orbit", "separate", &path("g1b2.dsc"), &path("g1b2-moved.dsc"), "--budget", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).ends_with("certificate=inconclusive\n"));
    let o = braidx(&["orbit", "separate", &path("g1b2.dsc"), &path("disk3.dsc")]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn mutate_output_rereads_to_the_same_dissection() {
    let dir = std::env::temp_dir().join(format!("braidx-mut-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("moved.dsc");
    let o = braidx(&[
        "dissection",
        "mutate",
        &path("g1b2.dsc"),
        "--word",
        "1 -2 3",
        "--output",
        &out.to_string_lossy(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        std::fs::read_to_string(&out).unwrap(),
        std::fs::read_to_string(corpus("g1b2-moved.dsc")).unwrap()
    );
    let o = braidx(&["dissection", "mutate", &out.to_string_lossy(), "--word", "-3 2 -1"]);
    let back = stdout(&o);
    let again = braidx(&["dissection", "mutate", &path("g1b2.dsc"), "--word", "1 -1"]);
    assert_eq!(back, stdout(&again));
}

#[test]
fn output_is_identical_across_thread_counts() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_braidx"))
            .args(["orbit", "explore", &path("g1b2.dsc"), "--depth", "3"])
            .env("BRAIDX_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn quiver_formats() {
    let o = braidx(&["dissection", "quiver", &path("g1b2.dsc")]);
    let text = stdout(&o);
    assert!(text.starts_with("vertices 4\narrows 6\n"), "{text}");
    let o = braidx(&["dissection", "quiver", &path("g1b2.dsc"), "--format", "dot"]);
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 6);
}

#[test]
fn genus_zero_preset() {
    let o = braidx(&["genus0", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("transitive=true\n"));
}
