//! Batch command-line surface: compute Schur functions, apply operator
//! strings, run Pieri rules and verification suites, and serialize results.
//!
//! Commands: `schur`, `apply`, `pieri`, `verify`, `conjugate`, `weight`,
//! `enumerate`.  Output is deterministic (canonical orders everywhere);
//! exit codes are `0` on success, `1` when an identity or `--check` fails,
//! `2` on usage or parse errors.
//!
//! The library takes all bounds explicitly through [`RunConfig`]; the one
//! environment variable, `SUPERSCHUR_CACHE_DIR`, is read by the binary and
//! passed in as the optional on-disk cache location.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use serde::Serialize;
use serde_json::json;

use crate::algebra::SuperPolynomial;
use crate::bases::{SchurExpansion, SchurTable, SchurType};
use crate::operators::{
    bernstein_b, bernstein_b_bar, bernstein_c, bernstein_c_bar, beta, mode_k, mode_l,
    partial_e_tilde, LinearOperator,
};
use crate::pieri::{self, DecoratedDiagram, PieriRule};
use crate::superpartition::SuperPartition;
use crate::verify::{self, Bounds};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IDENTITY_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Run configuration shared by the commands.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub max_total_degree: u32,
    pub max_fermionic_degree: usize,
    pub schur_type: SchurType,
    pub output_format: OutputFormat,
    pub cache_dir: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_total_degree: 6,
            max_fermionic_degree: 3,
            schur_type: SchurType::I,
            output_format: OutputFormat::Text,
            cache_dir: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format {other:?} (expected text or json)")),
        }
    }
}

/// A parse or usage error carrying the byte position where known.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

const HELP: &str = "superschur — exact symmetric functions in superspace

USAGE:
    superschur <COMMAND> [ARGS] [FLAGS]

COMMANDS:
    schur <TYPE> <LAMBDA>            power-sum expansion of a super-Schur function
    apply <OPS> [--on TYPE:LAMBDA]   apply an operator string, expand the result
    pieri <RULE> <R> <LAMBDA>        run a combinatorial Pieri rule
    verify <SUITE>                   run a verification suite
    conjugate <LAMBDA>               transpose a superpartition diagram
    weight <LAMBDA>                  the scalar-product weight z_Lambda
    enumerate <N> <M>                all superpartitions of degree (N, M)

TYPES:   I, Istar, II, IIstar
RULES:   eI, thetaI, hIstar, eIstar
SUITES:  orthogonality, pieri, dualities, negative-modes, appendixA, table1, all
OPS:     whitespace-separated modes, e.g. \"B4^1 B3^0 B2^0 B2^0 B1^1\";
         letters B, C, Bbar, Cbar, K, L with mode and ^0/^1, beta<n>, de<r>
LAMBDA:  \"a1,a2,...;s1,s2,...\" with either side possibly empty, e.g. \"3,0;2\"

FLAGS:
    --type <TYPE>            Schur family for expansions (default I)
    --max <N>                total-degree bound (default 6)
    --fermionic-max <M>      fermionic-degree bound (default 3)
    --format <text|json>     output format (default text)
    --check                  rerun the algebraic oracle on the result
    --diagrams               render ASCII diagrams (pieri)
";

/// Entry point used by the binary and by tests.  Returns the process exit
/// code and writes all output to `out`.
pub fn execute(args: &[String], cache_dir: Option<PathBuf>, out: &mut dyn std::io::Write) -> i32 {
    match run(args, cache_dir) {
        Ok(text) => {
            let _ = writeln!(out, "{text}");
            EXIT_OK
        }
        Err(CommandError::Usage(e)) => {
            let _ = writeln!(out, "error: {e}");
            let _ = write!(out, "{HELP}");
            EXIT_USAGE
        }
        Err(CommandError::IdentityFailure(text)) => {
            let _ = writeln!(out, "{text}");
            EXIT_IDENTITY_FAILURE
        }
    }
}

enum CommandError {
    Usage(UsageError),
    /// Output to print before exiting with code 1.
    IdentityFailure(String),
}

impl From<UsageError> for CommandError {
    fn from(e: UsageError) -> Self {
        CommandError::Usage(e)
    }
}

struct ParsedArgs {
    positional: Vec<String>,
    config: RunConfig,
    check: bool,
    diagrams: bool,
    on: Option<String>,
    explicit_type: bool,
}

fn parse_flags(args: &[String], cache_dir: Option<PathBuf>) -> Result<ParsedArgs, UsageError> {
    let mut positional = Vec::new();
    let mut config = RunConfig {
        cache_dir,
        ..RunConfig::default()
    };
    let mut check = false;
    let mut diagrams = false;
    let mut on = None;
    let mut explicit_type = false;
    let mut iter = args.iter().peekable();
    while let Some(arg) = iter.next() {
        let mut take_value = |name: &str| -> Result<String, UsageError> {
            iter.next()
                .cloned()
                .ok_or_else(|| usage(format!("flag {name} expects a value")))
        };
        match arg.as_str() {
            "--type" => {
                let v = take_value("--type")?;
                config.schur_type = v
                    .parse()
                    .map_err(|e: crate::bases::ParseSchurTypeError| usage(e.to_string()))?;
                explicit_type = true;
            }
            "--max" => {
                let v = take_value("--max")?;
                config.max_total_degree = v
                    .parse()
                    .map_err(|_| usage(format!("--max expects a non-negative integer, got {v:?}")))?;
            }
            "--fermionic-max" => {
                let v = take_value("--fermionic-max")?;
                config.max_fermionic_degree = v.parse().map_err(|_| {
                    usage(format!("--fermionic-max expects a non-negative integer, got {v:?}"))
                })?;
            }
            "--format" => {
                let v = take_value("--format")?;
                config.output_format = v.parse().map_err(usage)?;
            }
            "--on" => on = Some(take_value("--on")?),
            "--check" => check = true,
            "--diagrams" => diagrams = true,
            "--help" | "-h" => return Err(usage("help requested")),
            other if other.starts_with("--") => {
                return Err(usage(format!("unknown flag {other:?}")));
            }
            _ => positional.push(arg.clone()),
        }
    }
    Ok(ParsedArgs {
        positional,
        config,
        check,
        diagrams,
        on,
        explicit_type,
    })
}

fn parse_lambda(text: &str) -> Result<SuperPartition, UsageError> {
    text.parse::<SuperPartition>()
        .map_err(|e| usage(format!("invalid superpartition {text:?}: {e}")))
}

fn run(args: &[String], cache_dir: Option<PathBuf>) -> Result<String, CommandError> {
    let (command, rest) = args
        .split_first()
        .ok_or_else(|| usage("missing command"))?;
    let parsed = parse_flags(rest, cache_dir)?;
    match command.as_str() {
        "schur" => cmd_schur(parsed),
        "apply" => cmd_apply(parsed),
        "pieri" => cmd_pieri(parsed),
        "verify" => cmd_verify(parsed),
        "conjugate" => cmd_conjugate(parsed),
        "weight" => cmd_weight(parsed),
        "enumerate" => cmd_enumerate(parsed),
        other => Err(usage(format!("unknown command {other:?}")).into()),
    }
}

fn make_table(config: &RunConfig) -> SchurTable {
    match &config.cache_dir {
        Some(dir) => SchurTable::with_cache_dir(dir.clone()),
        None => SchurTable::new(),
    }
}

fn sp_json(sp: &SuperPartition) -> serde_json::Value {
    serde_json::to_value(sp).expect("superpartition serializes")
}

fn expansion_json(expansion: &SchurExpansion) -> serde_json::Value {
    serde_json::Value::Array(
        expansion
            .coeffs
            .iter()
            .map(|(sp, c)| json!({"lambda": sp_json(sp), "coeff": c.to_string()}))
            .collect(),
    )
}

fn finish_with_check(
    mut body: String,
    format: OutputFormat,
    json_value: Option<serde_json::Value>,
    check: Option<Result<(), String>>,
) -> Result<String, CommandError> {
    match format {
        OutputFormat::Text => {
            let failed = match &check {
                Some(Err(detail)) => {
                    let _ = write!(body, "\ncheck\tFAIL\t{detail}");
                    true
                }
                Some(Ok(())) => {
                    let _ = write!(body, "\ncheck\tPASS");
                    false
                }
                None => false,
            };
            if failed {
                Err(CommandError::IdentityFailure(body))
            } else {
                Ok(body)
            }
        }
        OutputFormat::Json => {
            let mut value = json_value.expect("json value present for json format");
            let failed = match &check {
                Some(Err(detail)) => {
                    value["check"] = json!({"passed": false, "detail": detail});
                    true
                }
                Some(Ok(())) => {
                    value["check"] = json!({"passed": true});
                    false
                }
                None => false,
            };
            let rendered = serde_json::to_string_pretty(&value).expect("serializable");
            if failed {
                Err(CommandError::IdentityFailure(rendered))
            } else {
                Ok(rendered)
            }
        }
    }
}

// ---------------------------------------------------------------------------
// schur
// ---------------------------------------------------------------------------

fn cmd_schur(parsed: ParsedArgs) -> Result<String, CommandError> {
    let [ty_text, lambda_text] = parsed.positional.as_slice() else {
        return Err(usage("schur expects <TYPE> <LAMBDA>").into());
    };
    let ty: SchurType = ty_text
        .parse()
        .map_err(|e: crate::bases::ParseSchurTypeError| usage(e.to_string()))?;
    let sp = parse_lambda(lambda_text)?;
    let table = make_table(&parsed.config);
    let poly = table.schur(ty, &sp);

    // the oracle here is the dual pairing over the whole bidegree block
    let check = parsed.check.then(|| {
        let class = SuperPartition::enumerate(sp.total_degree(), sp.fermionic_degree());
        for other in class {
            let dual = table.schur(ty.dual(), &other);
            let inner = poly.scalar_product(&dual);
            let expected = if other == sp {
                crate::algebra::rat_int(1)
            } else {
                crate::algebra::rat_int(0)
            };
            if inner != expected {
                return Err(format!("⟨{ty}:{sp}, {}:{other}⟩ = {inner}", ty.dual()));
            }
        }
        Ok(())
    });

    let json_value = (parsed.config.output_format == OutputFormat::Json).then(|| {
        json!({
            "command": "schur",
            "type": ty.to_string(),
            "lambda": sp_json(&sp),
            "terms": poly.to_json_terms(),
        })
    });
    finish_with_check(
        poly.render_text(),
        parsed.config.output_format,
        json_value,
        check,
    )
}

// ---------------------------------------------------------------------------
// apply
// ---------------------------------------------------------------------------

/// Parses one operator token, e.g. `B3^1`, `L-2^0`, `beta2`, `de0`.
pub fn parse_operator(token: &str) -> Result<LinearOperator, UsageError> {
    let (name, rest): (&str, &str) = ["Bbar", "Cbar", "beta", "de", "B", "C", "K", "L"]
        .iter()
        .find_map(|prefix| token.strip_prefix(prefix).map(|rest| (*prefix, rest)))
        .ok_or_else(|| usage(format!("unknown operator {token:?}")))?;
    let parse_int = |text: &str| -> Result<i64, UsageError> {
        text.parse()
            .map_err(|_| usage(format!("invalid mode index in {token:?}")))
    };
    match name {
        "beta" => {
            let n = parse_int(rest)?;
            if n == 0 {
                return Err(usage(format!("beta mode must be nonzero in {token:?}")));
            }
            Ok(beta(n))
        }
        "de" => {
            let r: u32 = rest
                .parse()
                .map_err(|_| usage(format!("invalid derivation index in {token:?}")))?;
            Ok(partial_e_tilde(r))
        }
        _ => {
            let (mode_text, eps_text) = rest
                .split_once('^')
                .ok_or_else(|| usage(format!("operator {token:?} needs ^0 or ^1")))?;
            let n = parse_int(mode_text)?;
            let eps: u8 = match eps_text {
                "0" => 0,
                "1" => 1,
                other => {
                    return Err(usage(format!(
                        "epsilon must be 0 or 1 in {token:?}, got {other:?}"
                    )))
                }
            };
            Ok(match name {
                "B" => bernstein_b(n, eps),
                "C" => bernstein_c(n, eps),
                "Bbar" => bernstein_b_bar(n, eps),
                "Cbar" => bernstein_c_bar(n, eps),
                "K" => mode_k(n, eps),
                "L" => mode_l(n, eps),
                _ => unreachable!(),
            })
        }
    }
}

/// Parses a whitespace-separated operator string.
pub fn parse_operator_string(text: &str) -> Result<Vec<LinearOperator>, UsageError> {
    text.split_whitespace().map(parse_operator).collect()
}

fn cmd_apply(parsed: ParsedArgs) -> Result<String, CommandError> {
    let [ops_text] = parsed.positional.as_slice() else {
        return Err(usage("apply expects <OPERATOR-STRING> [--on TYPE:LAMBDA]").into());
    };
    let on: Option<(SchurType, SuperPartition)> = match &parsed.on {
        None => None,
        Some(value) => {
            let (ty_text, lambda_text) = value
                .split_once(':')
                .ok_or_else(|| usage(format!("--on expects TYPE:LAMBDA, got {value:?}")))?;
            let ty: SchurType = ty_text
                .parse()
                .map_err(|e: crate::bases::ParseSchurTypeError| usage(e.to_string()))?;
            Some((ty, parse_lambda(lambda_text)?))
        }
    };

    let ops = parse_operator_string(ops_text)?;
    let table = make_table(&parsed.config);
    // the result expands in --type when given, otherwise in the --on family
    let (input, mut expand_type) = match &on {
        Some((ty, sp)) => ((*table.schur(*ty, sp)).clone(), *ty),
        None => (SuperPolynomial::one(), parsed.config.schur_type),
    };
    if parsed.explicit_type {
        expand_type = parsed.config.schur_type;
    }
    let result = crate::operators::apply_string(&ops, &input);

    for degree in result.bidegrees() {
        if degree.total > parsed.config.max_total_degree
            || degree.fermionic as usize > parsed.config.max_fermionic_degree
        {
            return Err(usage(format!(
                "result bidegree {degree} exceeds the configured bounds \
                 ({}, {}); raise --max / --fermionic-max",
                parsed.config.max_total_degree, parsed.config.max_fermionic_degree
            ))
            .into());
        }
    }

    let expansion = table.expand(&result, expand_type);
    let check = parsed.check.then(|| {
        let reconstructed = table.reconstruct(&expansion, expand_type);
        if reconstructed == result {
            Ok(())
        } else {
            Err("expansion does not reconstruct the polynomial".to_string())
        }
    });

    let body = if expansion.is_zero() {
        "0".to_string()
    } else {
        expansion.render_lines()
    };
    let json_value = (parsed.config.output_format == OutputFormat::Json).then(|| {
        json!({
            "command": "apply",
            "operators": ops_text,
            "on": on.as_ref().map(|(ty, sp)| json!({
                "type": ty.to_string(),
                "lambda": sp_json(sp),
            })),
            "expand_type": expand_type.to_string(),
            "expansion": expansion_json(&expansion),
        })
    });
    finish_with_check(body, parsed.config.output_format, json_value, check)
}

// ---------------------------------------------------------------------------
// pieri
// ---------------------------------------------------------------------------

fn cmd_pieri(parsed: ParsedArgs) -> Result<String, CommandError> {
    let [rule_text, r_text, lambda_text] = parsed.positional.as_slice() else {
        return Err(usage("pieri expects <RULE> <R> <LAMBDA>").into());
    };
    let rule: PieriRule = rule_text
        .parse()
        .map_err(|e: pieri::ParsePieriRuleError| usage(e.to_string()))?;
    let r: u32 = r_text
        .parse()
        .map_err(|_| usage(format!("invalid strip size {r_text:?}")))?;
    if rule == PieriRule::ThetaI && r == 0 {
        return Err(usage("thetaI requires r >= 1").into());
    }
    let sp = parse_lambda(lambda_text)?;
    let expansion = pieri::apply_rule(rule, r, &sp);

    let check = parsed.check.then(|| {
        let table = make_table(&parsed.config);
        pieri::matches_oracle(&table, rule, r, &sp)
    });

    let mut body = String::new();
    if expansion.is_empty() {
        body.push('0');
    }
    for (i, (omega, coeff)) in expansion.iter().enumerate() {
        if i > 0 {
            body.push('\n');
        }
        let _ = write!(body, "{omega}\t{coeff}");
        if parsed.diagrams {
            let diagram = DecoratedDiagram::for_transition(&sp, omega);
            for line in diagram.render().lines() {
                let _ = write!(body, "\n  {line}");
            }
        }
    }
    let json_value = (parsed.config.output_format == OutputFormat::Json).then(|| {
        json!({
            "command": "pieri",
            "rule": rule.to_string(),
            "r": r,
            "lambda": sp_json(&sp),
            "expansion": expansion.iter().map(|(omega, coeff)| {
                let mut entry = json!({
                    "lambda": sp_json(omega),
                    "coeff": coeff.to_string(),
                });
                if parsed.diagrams {
                    entry["diagram"] = json!(
                        DecoratedDiagram::for_transition(&sp, omega).render()
                    );
                }
                entry
            }).collect::<Vec<_>>(),
        })
    });
    finish_with_check(body, parsed.config.output_format, json_value, check)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct VerifyReportJson<'a> {
    command: &'a str,
    suite: &'a str,
    max_total: u32,
    max_fermionic: usize,
    passed: bool,
    reports: &'a [verify::SuiteReport],
}

fn cmd_verify(parsed: ParsedArgs) -> Result<String, CommandError> {
    let [suite_text] = parsed.positional.as_slice() else {
        return Err(usage(format!(
            "verify expects one suite out of {:?}",
            verify::SUITE_NAMES
        ))
        .into());
    };
    let bounds = Bounds {
        max_total: parsed.config.max_total_degree,
        max_fermionic: parsed.config.max_fermionic_degree,
    };
    let table = make_table(&parsed.config);
    let reports =
        verify::run_suite(&table, suite_text, bounds).map_err(usage)?;
    let passed = reports.iter().all(|r| r.passed);

    let body = match parsed.config.output_format {
        OutputFormat::Json => {
            let value = VerifyReportJson {
                command: "verify",
                suite: suite_text,
                max_total: bounds.max_total,
                max_fermionic: bounds.max_fermionic,
                passed,
                reports: &reports,
            };
            serde_json::to_string_pretty(&value).expect("serializable")
        }
        OutputFormat::Text => {
            let mut lines = Vec::new();
            for report in &reports {
                for check in &report.checks {
                    let status = if check.passed { "ok" } else { "FAIL" };
                    let mut line =
                        format!("{status}\t{}/{} ({} ms)", report.suite, check.name, check.millis);
                    if let Some(detail) = &check.detail {
                        let _ = write!(line, "\n\tfirst counterexample: {detail}");
                    }
                    lines.push(line);
                }
            }
            lines.push(format!(
                "{}\t{} checks in {} suites",
                if passed { "PASS" } else { "FAIL" },
                reports.iter().map(|r| r.checks.len()).sum::<usize>(),
                reports.len(),
            ));
            lines.join("\n")
        }
    };
    if passed {
        Ok(body)
    } else {
        Err(CommandError::IdentityFailure(body))
    }
}

// ---------------------------------------------------------------------------
// conjugate, weight, enumerate
// ---------------------------------------------------------------------------

fn cmd_conjugate(parsed: ParsedArgs) -> Result<String, CommandError> {
    let [lambda_text] = parsed.positional.as_slice() else {
        return Err(usage("conjugate expects <LAMBDA>").into());
    };
    let sp = parse_lambda(lambda_text)?;
    let conj = sp.conjugate();
    let check = parsed
        .check
        .then(|| {
            if conj.conjugate() == sp {
                Ok(())
            } else {
                Err(format!("conjugate is not involutive at {sp}"))
            }
        });
    let json_value = (parsed.config.output_format == OutputFormat::Json).then(|| {
        json!({
            "command": "conjugate",
            "lambda": sp_json(&sp),
            "conjugate": sp_json(&conj),
        })
    });
    finish_with_check(
        conj.to_string(),
        parsed.config.output_format,
        json_value,
        check,
    )
}

fn cmd_weight(parsed: ParsedArgs) -> Result<String, CommandError> {
    let [lambda_text] = parsed.positional.as_slice() else {
        return Err(usage("weight expects <LAMBDA>").into());
    };
    let sp = parse_lambda(lambda_text)?;
    let weight = sp.z_weight();
    // oracle: the diagonal of the power-sum Gram matrix
    let check = parsed.check.then(|| {
        let x = crate::bases::power_sum(&sp);
        let inner = x.scalar_product(&x);
        if inner == weight.value {
            Ok(())
        } else {
            Err(format!("⟨X,X⟩ = {inner} but weight formula gave {}", weight.value))
        }
    });
    let json_value = (parsed.config.output_format == OutputFormat::Json).then(|| {
        json!({
            "command": "weight",
            "lambda": sp_json(&sp),
            "weight": weight.value.to_string(),
            "sign_exponent": weight.sign_exponent,
        })
    });
    finish_with_check(
        weight.value.to_string(),
        parsed.config.output_format,
        json_value,
        check,
    )
}

fn cmd_enumerate(parsed: ParsedArgs) -> Result<String, CommandError> {
    let [n_text, m_text] = parsed.positional.as_slice() else {
        return Err(usage("enumerate expects <TOTAL> <FERMIONIC>").into());
    };
    let n: u32 = n_text
        .parse()
        .map_err(|_| usage(format!("invalid total degree {n_text:?}")))?;
    let m: usize = m_text
        .parse()
        .map_err(|_| usage(format!("invalid fermionic degree {m_text:?}")))?;
    let class = SuperPartition::enumerate(n, m);
    let check = parsed.check.then(|| {
        for sp in &class {
            if !class.contains(&sp.conjugate()) {
                return Err(format!("class not closed under conjugation at {sp}"));
            }
        }
        Ok(())
    });
    let body = if class.is_empty() {
        "(none)".to_string()
    } else {
        class
            .iter()
            .map(|sp| sp.to_string())
            .collect::<Vec<_>>()
            .join("\n")
    };
    let json_value = (parsed.config.output_format == OutputFormat::Json).then(|| {
        json!({
            "command": "enumerate",
            "total": n,
            "fermionic": m,
            "superpartitions": class.iter().map(sp_json).collect::<Vec<_>>(),
        })
    });
    finish_with_check(body, parsed.config.output_format, json_value, check)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_cli(args: &[&str]) -> (i32, String) {
        let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        let mut out = Vec::new();
        let code = execute(&args, None, &mut out);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn schur_command_matches_fixture() {
        let (code, out) = run_cli(&["schur", "I", "0;3"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.trim(), "-1 t4 | 1 t1*x3 | 1 t1*x1*x2 | 1/6 t1*x1^3");
        let (code, out) = run_cli(&["schur", "I", ";"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.trim(), "1");
    }

    #[test]
    fn schur_parse_error_exits_2() {
        let (code, out) = run_cli(&["schur", "I", "2,2;1"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.contains("strictly decreasing"), "{out}");
        let (code, _) = run_cli(&["schur", "III", ";1"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn apply_single_mode() {
        let (code, out) = run_cli(&["apply", "B3^1", "--on", "I:0;3", "--check"]);
        assert_eq!(code, EXIT_OK, "{out}");
        assert_eq!(out.trim(), "3,0;3\t1\ncheck\tPASS");
    }

    #[test]
    fn apply_full_string() {
        let (code, out) = run_cli(&[
            "apply",
            "B4^1 B3^0 B2^0 B2^0 B1^1",
            "--max",
            "12",
            "--fermionic-max",
            "4",
        ]);
        assert_eq!(code, EXIT_OK, "{out}");
        assert_eq!(out.trim(), "4,1;3,2,2\t1");
    }

    #[test]
    fn apply_type_flag_overrides_expansion_family() {
        // expand a type-I value in the type-I* family: s_(;2) = h_2 = s*_(;2)
        let (code, out) = run_cli(&["apply", "B2^0", "--on", "I:;", "--type", "Istar"]);
        assert_eq!(code, EXIT_OK, "{out}");
        assert_eq!(out.trim(), ";2\t1");
    }

    #[test]
    fn apply_de0_annihilates_bosonic() {
        let (code, out) = run_cli(&["apply", "de0", "--on", "I:;3"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.trim(), "0");
    }

    #[test]
    fn apply_unknown_operator() {
        let (code, out) = run_cli(&["apply", "Q3^1"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.contains("unknown operator"), "{out}");
    }

    #[test]
    fn apply_bidegree_overflow() {
        let (code, out) = run_cli(&["apply", "B9^0", "--on", "I:;1"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.contains("exceeds the configured bounds"), "{out}");
    }

    #[test]
    fn pieri_theta_example() {
        let (code, out) = run_cli(&["pieri", "thetaI", "4", "0;3", "--check"]);
        assert_eq!(code, EXIT_OK, "{out}");
        let lines: Vec<&str> = out.trim().lines().collect();
        assert_eq!(lines.len(), 7);
        assert_eq!(lines[6], "check\tPASS");
        assert!(lines[..6].iter().all(|l| l.ends_with("\t1")), "{out}");
    }

    #[test]
    fn pieri_trivial_e0() {
        let (code, out) = run_cli(&["pieri", "eI", "0", "1;2"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.trim(), "1;2\t1");
    }

    #[test]
    fn verify_trivial_orthogonality() {
        let (code, out) = run_cli(&["verify", "orthogonality", "--max", "0"]);
        assert_eq!(code, EXIT_OK, "{out}");
        assert!(out.contains("PASS"), "{out}");
    }

    #[test]
    fn verify_unknown_suite() {
        let (code, _) = run_cli(&["verify", "everything"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn conjugate_weight_enumerate() {
        let (code, out) = run_cli(&["conjugate", "8,6,3,2,0;5,3"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.trim(), "6,5,3,1,0;6,3,2,1");

        let (code, out) = run_cli(&["weight", "1,0;", "--check"]);
        assert_eq!(code, EXIT_OK, "{out}");
        assert_eq!(out.trim(), "-1\ncheck\tPASS");

        let (code, out) = run_cli(&["enumerate", "3", "1"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.trim().lines().count(), 7);
    }

    #[test]
    fn json_round_trips_through_parser() {
        let (code, out) = run_cli(&["schur", "Istar", "2;1", "--format", "json"]);
        assert_eq!(code, EXIT_OK);
        let value: serde_json::Value = serde_json::from_str(&out).unwrap();
        let terms: Vec<crate::algebra::TermJson> =
            serde_json::from_value(value["terms"].clone()).unwrap();
        let poly = SuperPolynomial::from_json_terms(&terms).unwrap();
        let table = SchurTable::new();
        assert_eq!(poly, *table.schur(SchurType::IStar, &"2;1".parse().unwrap()));
    }

    #[test]
    fn output_is_reproducible() {
        let (_, first) = run_cli(&["schur", "II", "2,0;1"]);
        let (_, second) = run_cli(&["schur", "II", "2,0;1"]);
        assert_eq!(first, second);
    }
}
