//! CSV tables for the headline results: reciprocity verdicts, Gauss-sum
//! signs, and the proportionality constants. UTF-8, header row, LF endings,
//! stable column order.

use num_complex::Complex64;

use weilrep_core::arithmetic::{gauss_sum, qr_verify};
use weilrep_core::cyclo::{solve_proportionality_constant, vandermonde_det_product};
use weilrep_core::residue::is_prime;

use crate::suites::SuiteError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Reciprocity,
    GaussSigns,
    Constants,
}

impl TableKind {
    pub fn parse(s: &str) -> Result<Self, SuiteError> {
        match s {
            "reciprocity" => Ok(TableKind::Reciprocity),
            "gauss-signs" => Ok(TableKind::GaussSigns),
            "constants" => Ok(TableKind::Constants),
            other => Err(SuiteError::InvalidParams(format!("unknown table kind: {other}"))),
        }
    }
}

fn fmt_complex(e: Complex64) -> (String, String) {
    (format!("{:.9}", e.re), format!("{:.9}", e.im))
}

/// Renders the requested table as CSV.
pub fn emit_table(kind: TableKind, bound: u64) -> Result<String, SuiteError> {
    let mut out = String::new();
    match kind {
        TableKind::Reciprocity => {
            out.push_str("p,q,symbol_product,parity_rhs,agree\n");
            let primes: Vec<u64> = (3..=bound).filter(|&p| is_prime(p)).collect();
            for (i, &p) in primes.iter().enumerate() {
                for &q in &primes[i + 1..] {
                    let v = qr_verify(p, q).expect("valid prime pair");
                    out.push_str(&format!(
                        "{},{},{},{},{}\n",
                        p, q, v.lhs_direct, v.rhs_parity, v.pass
                    ));
                }
            }
        }
        TableKind::GaussSigns => {
            out.push_str("p,gauss_sum_exact,embed_re,embed_im,closed_form,residual\n");
            for p in (3..=bound).filter(|&p| is_prime(p)) {
                let g = gauss_sum(p, 1).expect("odd prime");
                let e = g.embed();
                let (re, im) = fmt_complex(e);
                let closed = if p % 4 == 1 {
                    (Complex64::new((p as f64).sqrt(), 0.0), format!("sqrt({p})"))
                } else {
                    (Complex64::new(0.0, (p as f64).sqrt()), format!("i*sqrt({p})"))
                };
                out.push_str(&format!(
                    "{},{},{},{},{},{:.3e}\n",
                    p,
                    g,
                    re,
                    im,
                    closed.1,
                    (e - closed.0).norm()
                ));
            }
        }
        TableKind::Constants => {
            out.push_str("n,c_exact,c_embed_re,c_embed_im,det_f_exact\n");
            for n in (1..=bound).step_by(2) {
                let det = vandermonde_det_product(n);
                let c = solve_proportionality_constant(n, &det).expect("valid determinant");
                let (re, im) = fmt_complex(c.embed());
                out.push_str(&format!("{},{},{},{},{}\n", n, c, re, im, det));
            }
        }
    }
    Ok(out)
}
