//! Golden-file harness for the `tumatroid` binary.
//!
//! Every case runs the binary inside `fixtures/` and compares stdout with
//! `fixtures/golden/<name>.out` byte for byte. Set `UPDATE_GOLDEN=1` to
//! rewrite the golden files instead.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub struct Case {
    pub name: &'static str,
    pub args: &'static str,
    pub exit: i32,
}

const K3_LABELS: &str = "--x0 x0 --x1 x1 --x2 x2 --y0 y0 --y1 y1 --y2 y2";

pub fn cases() -> Vec<Case> {
    let c = |name, args, exit| Case { name, args, exit };
    vec![
        c("tu_check_identity", "tu check identity.json", 0),
        c("tu_check_not_tu", "tu check not_tu.json", 1),
        c("tu_check_bad_entry", "tu check bad_entry.json", 2),
        c("tu_check_wrong_field", "tu check r10.json", 2),
        c("tu_check_guard", "tu check --tu-max-dim 1 identity.json", 3),
        c("tu_check_network_incidence", "tu check network_incidence.json", 0),
        c("tu_check_network_path", "tu check network_path.json", 0),
        c("tu_check_network_interval", "tu check network_interval.json", 0),
        c("tu_sign_fano", "tu sign fano.json", 1),
        c("tu_sign_identity", "tu sign identity_gf2.json", 0),
        c("tu_sign_r10", "tu sign r10.json", 0),
        c("tu_sign_guard", "tu sign --sign-max-free 2 r10.json", 3),
        c("sum_k1", "sum --k 1 sum1_left.json sum1_right.json", 0),
        c("sum_k1_overlap", "sum --k 1 sum1_left.json sum1_overlap_right.json", 1),
        c("sum_k2", "sum --k 2 sum2_left.json sum2_right.json --x x --y y", 0),
        c("sum_k2_zero_r", "sum --k 2 sum2_zero_r_left.json sum2_right.json --x x --y y", 1),
        c("sum_k2_missing_flag", "sum --k 2 sum2_left.json sum2_right.json --x x", 2),
        c("sum_k2_bad_shape", "sum --k 2 sum2_left.json sum2_right.json --x a --y y", 2),
        c("sum_k3_identity", "sum --k 3 sum3_identity_left.json sum3_identity_right.json LABELS", 0),
        c("sum_k3_upper", "sum --k 3 sum3_upper_left.json sum3_upper_right.json LABELS", 0),
        c("regular_fano", "regular check fano_repr.json", 1),
        c("regular_r10", "regular check r10_repr.json", 0),
        c("matroid_info_r10", "matroid info r10_repr.json", 0),
        c("matroid_info_fano", "matroid info fano_repr.json", 0),
        c("matroid_eq_equal", "matroid eq fano_full.json fano_repr.json", 0),
        c("matroid_eq_different", "matroid eq r10.json fano.json", 1),
        c("matroid_eq_guard", "matroid eq --eq-max-ground 5 fano_full.json fano_repr.json", 3),
        c("verify_k1", "verify composition --k 1 sum1_left.json sum1_right.json", 0),
        c("verify_k2", "verify composition --k 2 sum2_left.json sum2_right.json --x x --y y", 0),
        c("verify_k3_identity", "verify composition --k 3 sum3_identity_left.json sum3_identity_right.json LABELS", 0),
        c("verify_k3_upper", "verify composition --k 3 sum3_upper_left.json sum3_upper_right.json LABELS", 0),
        c("verify_fano_left", "verify composition --k 1 fano_repr.json sum1_right.json", 1),
    ]
}

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tumatroid"))
        .args(args)
        .current_dir(fixtures())
        .env_remove("TUMATROID_TU_MAX_DIM")
        .env_remove("TUMATROID_SIGN_MAX_FREE")
        .env_remove("TUMATROID_EQ_MAX_GROUND")
        .output()
        .expect("binary runs")
}

pub fn split(args: &str) -> Vec<&str> {
    args.split_whitespace()
        .flat_map(|a| if a == "LABELS" { K3_LABELS.split(' ').collect() } else { vec![a] })
        .collect()
}

/// Runs one case; `Err` describes the mismatch.
pub fn check(case: &Case) -> Result<(), String> {
    let out = run(&split(case.args));
    let code = out.status.code().unwrap_or(-1);
    let golden = fixtures().join("golden").join(format!("{}.out", case.name));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&golden, &out.stdout).expect("golden file writable");
    }
    let want = std::fs::read(&golden).map_err(|e| format!("{}: {e}", golden.display()))?;
    if code != case.exit {
        return Err(format!(
            "{}: exit {code}, expected {} (stderr: {})",
            case.name,
            case.exit,
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    if out.stdout != want {
        return Err(format!(
            "{}: stdout differs from golden\n--- got\n{}--- want\n{}",
            case.name,
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&want)
        ));
    }
    Ok(())
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}
