use charring::TracePolynomial;
use charring_cli::{run, run_with_seed_env, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn call_env(args: &[&str], seed_env: Option<&str>) -> Output {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("charring").chain(args.iter().copied());
    let code = run_with_seed_env(argv, seed_env, &mut out, &mut err);
    Output { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn call(args: &[&str]) -> Output {
    call_env(args, None)
}

fn poly(s: &str) -> TracePolynomial {
    s.parse().unwrap()
}

#[test]
fn trace_prints_canonical_form() {
    let o = call(&["trace", "awaW"]);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.stdout, "x*y*z - y^2 - z^2 + 2\n");
    let o = call(&["trace", "awaW", "--engine", "frame"]);
    assert_eq!(o.stdout, "x*y*z - y^2 - z^2 + 2\n");
    assert_eq!(call(&["trace", ""]).stdout, "2\n");
    assert_eq!(call(&["trace", "(aw)^-3"]).stdout.trim().parse::<TracePolynomial>().unwrap(), poly("z^3 - 3*z"));
}

#[test]
fn trace_json_round_trips() {
    let o = call(&["trace", "aWaaw", "--json"]);
    assert_eq!(o.code, EXIT_OK);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    let p: TracePolynomial = serde_json::from_value(v["trace"].clone()).unwrap();
    assert_eq!(serde_json::to_value(&p).unwrap(), v["trace"]);
    let text = v["text"].as_str().unwrap();
    assert_eq!(p.to_string(), text);
    assert_eq!(call(&["trace", "aWaaw"]).stdout.trim(), text);
}

#[test]
fn chebyshev_subcommand() {
    assert_eq!(call(&["chebyshev", "3"]).stdout, "y^3 - 2*y\n");
    assert_eq!(call(&["chebyshev", "-3"]).stdout, "-y\n");
    assert_eq!(
        call(&["chebyshev", "2", "--of", "x*z - y"]).stdout.trim().parse::<TracePolynomial>().unwrap(),
        poly("(x*z-y)^2 - 1")
    );
    assert_eq!(call(&["chebyshev", "5000"]).code, EXIT_USAGE);
    assert_eq!(call(&["chebyshev", "2", "--of", "x +"]).code, EXIT_USAGE);
}

#[test]
fn charring_subcommand() {
    let o = call(&["charring", "--palindromic", "wwawaWA"]);
    assert_eq!(o.code, EXIT_OK);
    let g: TracePolynomial = o.stdout.trim().parse().unwrap();
    assert_eq!(g, &poly("x*y*z + 4 - x^2 - y^2 - z^2") * &poly("z*(z*y - x)"));

    let o = call(&["charring", "--relator", "aaw=wa", "--json"]);
    assert_eq!(o.code, EXIT_OK);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["bundle"]["palindromic"], Value::Bool(false));
    assert_eq!(v["bundle"]["five"].as_array().unwrap().len(), 5);

    assert_eq!(call(&["charring"]).code, EXIT_USAGE);
    assert_eq!(call(&["charring", "--relator", "aw"]).code, EXIT_USAGE);
    assert_eq!(call(&["charring", "--palindromic", "abc"]).code, EXIT_USAGE);
    assert_eq!(call(&["charring", "--palindromic", "a", "--relator", "a=a"]).code, EXIT_USAGE);
}

#[test]
fn pretzel_subcommand() {
    let o = call(&["pretzel", "1", "3", "--check-reduced"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert!(o.stdout.contains("verdict: Reduced\n"));
    assert!(o.stdout.contains("q: y*z^2 - x*z\n"));

    let o = call(&["pretzel", "-3", "-2", "--check", "--check-reduced", "--json"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    for key in ["params", "generator", "q", "degrees", "leading_term", "report", "timings_ms"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["params"]["m"], -3);
    assert_eq!(v["report"]["verdict"], "Reduced");
    let g: TracePolynomial = serde_json::from_value(v["generator"].clone()).unwrap();
    assert_eq!(serde_json::to_value(&g).unwrap(), v["generator"]);
    assert_eq!(g, charring::pretzel::closed_form_generator(charring::pretzel::PretzelParams::new(-3, -2)).unwrap());

    let o = call(&["pretzel", "0", "-1", "--check-reduced", "--json"]);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["report"]["verdict"], "ReducedZeroIdeal");
    assert_eq!(v["leading_term"]["y_degree"], Value::Null);

    assert_eq!(call(&["pretzel", "1"]).code, EXIT_USAGE);
    assert_eq!(call(&["pretzel", "1", "x"]).code, EXIT_USAGE);
}

#[test]
fn scan_json_is_deterministic_across_pool_sizes() {
    let dir = tempfile::tempdir().unwrap();
    let mut docs = Vec::new();
    for par in ["1", "3"] {
        let path = dir.path().join(format!("scan{par}.json"));
        let o = call(&[
            "scan",
            "--m-range",
            "-1:2",
            "--n-range",
            "-2:1",
            "--checks",
            "all",
            "--parallelism",
            par,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
        let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let cells = v["cells"].as_array_mut().unwrap();
        let order: Vec<(i64, i64)> =
            cells.iter().map(|c| (c["params"]["m"].as_i64().unwrap(), c["params"]["n"].as_i64().unwrap())).collect();
        let mut sorted = order.clone();
        sorted.sort();
        assert_eq!(order, sorted);
        assert_eq!(order.len(), 16);
        for c in cells.iter_mut() {
            c.as_object_mut().unwrap().remove("timings_ms");
            let q: TracePolynomial = serde_json::from_value(c["q"].clone()).unwrap();
            assert_eq!(serde_json::to_value(&q).unwrap(), c["q"]);
        }
        v["config"].as_object_mut().unwrap().remove("parallelism");
        v["config"].as_object_mut().unwrap().remove("output_path");
        docs.push(v);
    }
    assert_eq!(docs[0], docs[1]);
}

#[test]
fn scan_csv_to_stdout() {
    let o = call(&["scan", "--m-range", "0:0", "--n-range", "-1:1", "--checks", "z0,leading_term", "--format", "csv"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let lines: Vec<&str> = o.stdout.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].starts_with("m,n,generator,q,"));
    assert!(lines[0].contains("z0,leading_term,passed"));
    assert!(lines[1].starts_with("0,-1,0,0,-inf,-inf,0,"));
}

#[test]
fn scan_usage_errors() {
    assert_eq!(call(&["scan", "--m-range", "2:1", "--n-range", "0:0"]).code, EXIT_USAGE);
    assert_eq!(call(&["scan", "--m-range", "0:1", "--n-range", "0"]).code, EXIT_USAGE);
    assert_eq!(call(&["scan", "--m-range", "0:1", "--n-range", "0:0", "--checks", "bogus"]).code, EXIT_USAGE);
    assert_eq!(call(&["scan", "--m-range", "0:1", "--n-range", "0:0", "--parallelism", "0"]).code, EXIT_USAGE);
    assert_eq!(call(&["scan", "--m-range", "0:1"]).code, EXIT_USAGE);
}

#[test]
fn verify_exit_codes() {
    let o = call(&["verify", "--trials", "200"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stdout);
    assert!(o.stdout.contains("failures: 0"));
    // A zero tolerance injects failures.
    let o = call(&["verify", "--trials", "20", "--tol", "0"]);
    assert_eq!(o.code, EXIT_CHECK_FAILED);
    assert!(o.stderr.contains("check failed"));
    assert_eq!(call(&["verify", "--tol", "-1"]).code, EXIT_USAGE);
}

#[test]
fn verify_seed_from_environment() {
    let json = |seed_env, extra: &[&str]| {
        let mut args = vec!["verify", "--trials", "30", "--json"];
        args.extend_from_slice(extra);
        let o = call_env(&args, seed_env);
        assert_eq!(o.code, EXIT_OK);
        serde_json::from_str::<Value>(&o.stdout).unwrap()
    };
    assert_eq!(json(None, &[])["config"]["seed"], 42);
    assert_eq!(json(Some("7"), &[])["config"]["seed"], 7);
    assert_eq!(json(Some("7"), &["--seed", "9"])["config"]["seed"], 9);
    assert_eq!(call_env(&["verify"], Some("seven")).code, EXIT_USAGE);
}

#[test]
fn help_and_unknown_commands() {
    let o = call(&["--help"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("scan"));
    assert_eq!(call(&[]).code, EXIT_USAGE);
    assert_eq!(call(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(call(&["trace"]).code, EXIT_USAGE);
    assert_eq!(call(&["trace", "axw"]).code, EXIT_USAGE);
}

#[test]
fn run_reads_process_environment() {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    assert_eq!(run(["charring", "trace", "a"], &mut out, &mut err), EXIT_OK);
    assert_eq!(out, b"x\n");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_charring");
    let status = |args: &[&str]| std::process::Command::new(bin).args(args).output().unwrap();
    let o = status(&["trace", "awaW"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&o.stdout), "x*y*z - y^2 - z^2 + 2\n");
    assert_eq!(status(&["verify", "--trials", "3", "--tol", "0"]).status.code(), Some(1));
    assert_eq!(status(&["nope"]).status.code(), Some(2));
    let o = std::process::Command::new(bin)
        .args(["verify", "--trials", "3", "--json"])
        .env("CHARRING_SEED", "123")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["config"]["seed"], 123);
}
