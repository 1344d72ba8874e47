//! Single-expression evaluation for the `eval` subcommand.

use dickson_core::dickson::{dickson_eval, DicksonKind};
use dickson_core::gamma::{lower_incomplete, upper_incomplete};
use dickson_core::identity::{
    lhs_series, p3_rhs_series, rhs_closed, Conventions, IdentityCase, IdentityId, TruncationPolicy,
};
use dickson_core::Complex64;

use crate::error::HarnessError;
use crate::parse::{fmt_complex, fmt_real, parse_bindings, parse_complex};

pub const EXPRESSIONS: [&str; 6] =
    ["upper_gamma", "lower_gamma", "dickson_first", "dickson_second", "theorem_lhs", "theorem_rhs"];

fn usage(msg: impl Into<String>) -> HarnessError {
    HarnessError::Usage(msg.into())
}

fn arity(expr: &str, args: &[String], n: usize) -> Result<(), HarnessError> {
    if args.len() != n {
        return Err(usage(format!("{expr} takes {n} arguments, got {}", args.len())));
    }
    Ok(())
}

fn identity_case(args: &[String]) -> Result<IdentityCase<f64>, HarnessError> {
    let (id, rest) = args.split_first().ok_or_else(|| usage("missing identity id"))?;
    let id: IdentityId = id.parse().map_err(|_| usage(format!("unknown identity id {id:?}")))?;
    let params = parse_bindings(rest.iter().map(String::as_str))?;
    IdentityCase::new(id, params).map_err(|e| usage(e.to_string()))
}

/// Evaluates one expression; returns the lines to print.
pub fn eval_one(expr: &str, args: &[String]) -> Result<String, HarnessError> {
    match expr {
        "upper_gamma" | "lower_gamma" => {
            arity(expr, args, 2)?;
            let (a, z) = (parse_complex(&args[0])?, parse_complex(&args[1])?);
            let v = if expr == "upper_gamma" { upper_incomplete(a, z)? } else { lower_incomplete(a, z)? };
            Ok(fmt_complex(v))
        }
        "dickson_first" | "dickson_second" => {
            arity(expr, args, 3)?;
            let n: usize = args[0]
                .parse()
                .map_err(|_| usage(format!("degree must be a nonnegative integer, got {:?}", args[0])))?;
            let (x, a) = (parse_complex(&args[1])?, parse_complex(&args[2])?);
            let kind = if expr == "dickson_first" { DicksonKind::First } else { DicksonKind::Second };
            Ok(fmt_complex(dickson_eval(kind, n, &x, &a)))
        }
        "theorem_lhs" => {
            let case = identity_case(args)?;
            let policy = TruncationPolicy::default_for(case.regime());
            let r = lhs_series(&case, &policy, Conventions::default())?;
            Ok(format!(
                "{}\nabs_err_estimate={} terms_used={} regime={}",
                fmt_complex(r.value),
                fmt_real(r.abs_err_estimate),
                r.terms_used,
                r.regime.name()
            ))
        }
        "theorem_rhs" => {
            let case = identity_case(args)?;
            if case.id == IdentityId::P3 {
                let r = p3_rhs_series(&case, &TruncationPolicy::default_for(case.regime()))?;
                return Ok(format!("{}\nabs_err_estimate={}", fmt_complex(r.value), fmt_real(r.abs_err_estimate)));
            }
            let v: Complex64 = rhs_closed(&case)?;
            Ok(fmt_complex(v))
        }
        other => Err(usage(format!("unknown expression {other:?}; expected one of {}", EXPRESSIONS.join(", ")))),
    }
}
