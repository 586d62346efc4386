//! Canonical text form: descending powers, explicit signs, caret exponents,
//! rational coefficients as `a/b`. Examples: `q^9 - q^6`, `2q^6 - 4q^4 + 2q^2`,
//! `1/2q^3 + 1`.

use num_traits::{One, Signed, Zero};

use crate::rat::{self, BigRat};
use crate::{ExactError, PolyQ};

pub(crate) fn render_poly(p: &PolyQ) -> String {
    let Some(deg) = p.degree() else {
        return "0".to_string();
    };
    let mut out = String::new();
    for k in (0..=deg).rev() {
        let c = p.coeff(k);
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if k == 0 || !a.is_one() {
            out.push_str(&rat::render(&a));
        }
        match k {
            0 => {}
            1 => out.push('q'),
            _ => out.push_str(&format!("q^{k}")),
        }
    }
    out
}

/// Accepts the canonical form plus a few lenient spellings: optional `*`
/// between coefficient and `q`, and braces around exponents (`q^{16}`).
pub(crate) fn parse_poly(s: &str) -> Result<PolyQ, ExactError> {
    let err = |reason: String| ExactError::Parse { input: s.to_string(), reason };
    let compact: String = s.chars().filter(|c| !c.is_whitespace() && *c != '{' && *c != '}').collect();
    if compact.is_empty() {
        return Err(err("empty input".into()));
    }
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for (i, ch) in compact.char_indices() {
        if (ch == '+' || ch == '-') && !(i > 0 && compact[..i].ends_with('^')) {
            if i > 0 {
                if cur.is_empty() {
                    return Err(err("dangling sign".into()));
                }
                terms.push((neg, std::mem::take(&mut cur)));
            }
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
    }
    if cur.is_empty() {
        return Err(err("dangling sign".into()));
    }
    terms.push((neg, cur));

    let mut acc = PolyQ::zero();
    for (neg, t) in terms {
        let (coef_txt, power) = match t.find('q') {
            None => (t.as_str(), 0usize),
            Some(pos) => {
                let rest = &t[pos + 1..];
                let power = if rest.is_empty() {
                    1
                } else if let Some(e) = rest.strip_prefix('^') {
                    e.parse::<usize>().map_err(|_| err(format!("bad exponent in {t:?}")))?
                } else {
                    return Err(err(format!("unexpected text after q in {t:?}")));
                };
                (t[..pos].trim_end_matches('*'), power)
            }
        };
        let mut c = if coef_txt.is_empty() {
            BigRat::one()
        } else {
            rat::parse(coef_txt).map_err(|_| err(format!("bad coefficient {coef_txt:?}")))?
        };
        if neg {
            c = -c;
        }
        acc = &acc + &PolyQ::monomial(c, power);
    }
    Ok(acc)
}
