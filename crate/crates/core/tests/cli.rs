use std::process::{Command, Output};

fn kdirac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kdirac"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_bijection_2x2() {
    let o = kdirac(&["verify", "bijection", "--k", "2", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("6 cosets matched"));
}

#[test]
fn complex_dot_is_a_chain() {
    let o = kdirac(&["complex", "--k", "2", "--n", "3", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert_eq!(dot.matches("[label=\"(").count(), 4);
    let orders: Vec<&str> = dot
        .lines()
        .filter(|l| l.contains("->"))
        .map(|l| l.rsplit("order=").next().unwrap().trim_end_matches("\"];"))
        .collect();
    assert_eq!(orders, ["1", "2", "1"]);
}

#[test]
fn images_csv_rows() {
    let o = kdirac(&["images", "--k", "2", "--n", "2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let csv = stdout(&o);
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(rows.len(), 6);
    assert_eq!(rows.iter().filter(|r| !r.contains(",0,,0")).count(), 4);
}

#[test]
fn unstable_range_is_a_usage_error() {
    let o = kdirac(&["partitions", "--k", "3", "--n", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("stable range n ≥ k ≥ 2 required"));
    assert_eq!(
        kdirac(&["weyl", "--k", "1", "--n", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(kdirac(&["bogus"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["bgg", "--k", "3", "--n", "3", "--format", "json"][..],
        &[
            "jets",
            "--k",
            "3",
            "--n",
            "3",
            "--r",
            "5",
            "--variant",
            "full",
            "--format",
            "json",
        ],
        &["weyl", "--k", "2", "--n", "4", "--format", "dot"],
    ] {
        assert_eq!(kdirac(args).stdout, kdirac(args).stdout, "{args:?}");
    }
}

#[test]
fn json_outputs_carry_header() {
    for verb in ["partitions", "weyl", "bgg", "images", "complex"] {
        let o = kdirac(&[verb, "--k", "2", "--n", "3", "--format", "json"]);
        assert_eq!(o.status.code(), Some(0), "{verb}");
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["tool"], "kdirac");
        assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
        assert_eq!(v["params"]["verb"], verb);
        assert_eq!(v["params"]["n"], 3);
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("kdirac-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bgg.dot");
    let o = kdirac(&[
        "bgg",
        "--k",
        "2",
        "--n",
        "2",
        "--format",
        "dot",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let dot = std::fs::read_to_string(&path).unwrap();
    assert_eq!(dot.matches("->").count(), 6);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_all_and_json() {
    let o = kdirac(&["verify", "all", "--k", "2", "--n", "3", "--rmax", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o)
            .lines()
            .filter(|l| l.starts_with("pass "))
            .count(),
        9
    );
    let o = kdirac(&[
        "verify", "euler", "--k", "2", "--n", "2", "--rmax", "3", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["data"]["reports"][0]["ok"], true);
}

#[test]
fn verify_all_skips_beyond_capacity() {
    let o = kdirac(&["verify", "all", "--k", "4", "--n", "4", "--rmax", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("skip bijection k=4 n=4"));
    let single = kdirac(&["verify", "bijection", "--k", "4", "--n", "4"]);
    assert_eq!(single.status.code(), Some(2));
}

#[test]
fn partition_filters() {
    let o = kdirac(&[
        "partitions",
        "--k",
        "3",
        "--n",
        "3",
        "--filter",
        "symmetric_with_r=6",
    ]);
    assert_eq!(
        stdout(&o).lines().next().unwrap(),
        "(3,3,3)@3x3 size=9 d=3 q=3 r=6 conjugate=(3,3,3) symmetric"
    );
    let o = kdirac(&[
        "partitions",
        "--k",
        "2",
        "--n",
        "2",
        "--filter",
        "symmetric",
        "--format",
        "csv",
    ]);
    assert_eq!(stdout(&o).lines().count(), 5);
    assert_eq!(
        kdirac(&["partitions", "--k", "2", "--n", "2", "--filter", "wat"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn jets_csv_is_the_first_page() {
    let o = kdirac(&[
        "jets", "--k", "2", "--n", "2", "--r", "4", "--format", "csv",
    ]);
    assert_eq!(
        stdout(&o),
        "q\\p,0,1,2,3,4\n1,660,480,0,0,0\n0,0,0,0,32,2\n"
    );
}
