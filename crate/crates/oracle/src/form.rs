//! Quadratic and alternating forms in normal form, and Witt types.

use atlas_orders::{CharParity, Sign, WittType};
use serde::Serialize;

use crate::field::{Elt, FieldTable};
use crate::linalg::{all_vectors, Mat};
use crate::OracleError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    Quadratic,
    Alternating,
}

/// `Q(x) = sum_{i<=j} c_ij x_i x_j`, or an alternating form given by its Gram
/// matrix. `polar` is the Gram matrix of the associated bilinear form.
#[derive(Clone, Debug)]
pub struct FormSpec {
    pub kind: FormKind,
    pub dim: usize,
    /// Upper-triangular coefficients `c_ij`, row-major; unused for alternating forms.
    pub coeff: Mat,
    pub polar: Mat,
    pub witt: Option<WittType>,
    pub sign: Option<Sign>,
}

impl FormSpec {
    fn quadratic(coeff: Mat, f: &FieldTable, witt: Option<WittType>, sign: Option<Sign>) -> Self {
        let n = coeff.n();
        let mut polar = Mat::zero(n);
        for i in 0..n {
            for j in 0..n {
                let v = if i == j {
                    f.add(coeff.get(i, i), coeff.get(i, i))
                } else if i < j {
                    coeff.get(i, j)
                } else {
                    coeff.get(j, i)
                };
                polar.set(i, j, v);
            }
        }
        FormSpec { kind: FormKind::Quadratic, dim: n, coeff, polar, witt, sign }
    }

    /// Orthogonal form of the given type; `sign` is ignored in odd dimension.
    pub fn orthogonal(dim: usize, sign: Sign, f: &FieldTable) -> Result<Self, OracleError> {
        let mut c = Mat::zero(dim);
        let parity = f.parity();
        if dim == 0 {
            return Err(OracleError::Degenerate);
        }
        match parity {
            CharParity::Odd => {
                let planes = dim / 2;
                for p in 0..planes {
                    c.set(2 * p, 2 * p + 1, 1);
                }
                if dim % 2 == 1 {
                    c.set(dim - 1, dim - 1, 1);
                    let s = Self::quadratic(c, f, Some(WittType::Type1), None);
                    return Ok(s);
                }
                if sign == Sign::Minus {
                    let last = 2 * (planes - 1);
                    c.set(last, last + 1, 0);
                    c.set(last, last, 1);
                    c.set(last + 1, last + 1, f.neg(f.non_square().expect("odd q")));
                }
            }
            CharParity::Even => {
                if dim % 2 == 1 {
                    return Err(OracleError::Unsupported("odd-dimensional orthogonal group in characteristic 2"));
                }
                let n = dim / 2;
                for i in 0..n {
                    c.set(i, i + n, 1);
                }
                if sign == Sign::Minus {
                    // x_n^2 + x_n x_2n + a x_2n^2 with t^2 + t + a irreducible
                    let a = f
                        .elements()
                        .find(|&a| f.elements().all(|t| f.add(f.add(f.mul(t, t), t), a) != 0))
                        .expect("irreducible quadratic exists");
                    c.set(n - 1, n - 1, 1);
                    c.set(2 * n - 1, 2 * n - 1, a);
                }
            }
        }
        let witt = if sign == Sign::Plus { WittType::Type0 } else { WittType::TypeW };
        let s = Self::quadratic(c, f, Some(witt), Some(sign));
        s.check_type(f)?;
        Ok(s)
    }

    /// `sum_{i<n} (x_i y_{i+n} - x_{i+n} y_i)`.
    pub fn symplectic(dim: usize, f: &FieldTable) -> Result<Self, OracleError> {
        if dim == 0 || dim % 2 == 1 {
            return Err(OracleError::Degenerate);
        }
        let n = dim / 2;
        let mut g = Mat::zero(dim);
        for i in 0..n {
            g.set(i, i + n, 1);
            g.set(i + n, i, f.neg(1));
        }
        Ok(FormSpec { kind: FormKind::Alternating, dim, coeff: Mat::zero(dim), polar: g, witt: None, sign: None })
    }

    pub fn q_value(&self, v: &[Elt], f: &FieldTable) -> Elt {
        let mut acc = 0;
        for i in 0..self.dim {
            if v[i] == 0 {
                continue;
            }
            for j in i..self.dim {
                let c = self.coeff.get(i, j);
                if c != 0 && v[j] != 0 {
                    acc = f.add(acc, f.mul(c, f.mul(v[i], v[j])));
                }
            }
        }
        acc
    }

    pub fn bilinear(&self, v: &[Elt], w: &[Elt], f: &FieldTable) -> Elt {
        let pw = self.polar.apply(w, f);
        v.iter().zip(&pw).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
    }

    /// Whether `g` preserves the form.
    pub fn preserved_by(&self, g: &Mat, f: &FieldTable) -> bool {
        let cols: Vec<Vec<Elt>> = (0..self.dim).map(|j| g.column(j)).collect();
        for i in 0..self.dim {
            let e_i = unit(self.dim, i);
            if self.kind == FormKind::Quadratic && self.q_value(&cols[i], f) != self.q_value(&e_i, f) {
                return false;
            }
            for j in 0..i {
                if self.bilinear(&cols[i], &cols[j], f) != self.polar.get(i, j) {
                    return false;
                }
            }
        }
        true
    }

    /// Number of vectors `v` (zero included) with `Q(v) = 0`.
    pub fn singular_count(&self, f: &FieldTable) -> usize {
        all_vectors(self.dim, f.q()).iter().filter(|v| self.q_value(v, f) == 0).count()
    }

    /// Confirm the plus/minus type by counting singular vectors:
    /// `q^{2n-1} ± q^n ∓ q^{n-1}` of them in dimension `2n`.
    fn check_type(&self, f: &FieldTable) -> Result<(), OracleError> {
        let (Some(sign), true) = (self.sign, self.dim % 2 == 0) else { return Ok(()) };
        let q = f.q() as i64;
        let n = (self.dim / 2) as u32;
        let s = sign.as_i64();
        let expect = q.pow(2 * n - 1) + s * (q.pow(n) - q.pow(n - 1));
        if self.singular_count(f) as i64 != expect {
            return Err(OracleError::WrongType(sign));
        }
        Ok(())
    }

    /// Symmetric matrix `G` with `Q(x) = x^T G x` restricted to the span of
    /// `basis`; `q` odd.
    pub fn restricted_gram(&self, basis: &[Vec<Elt>], f: &FieldTable) -> Mat {
        let half = f.inv(f.from_int(2));
        let k = basis.len();
        let mut g = Mat::zero(k);
        for i in 0..k {
            g.set(i, i, self.q_value(&basis[i], f));
            for j in 0..i {
                let b = f.mul(half, self.bilinear(&basis[i], &basis[j], f));
                g.set(i, j, b);
                g.set(j, i, b);
            }
        }
        g
    }
}

fn unit(n: usize, i: usize) -> Vec<Elt> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Witt type of `Q(x) = x^T G x`, `q` odd, from the discriminant
/// `(-1)^{floor(d/2)} det G`.
pub fn witt_type(gram: &Mat, f: &FieldTable) -> Result<WittType, OracleError> {
    if f.parity() == CharParity::Even {
        return Err(OracleError::NeedOddQ(f.q() as u64));
    }
    let d = gram.n();
    let det = gram.det(f);
    if d > 0 && det == 0 {
        return Err(OracleError::Degenerate);
    }
    let disc = if (d / 2) % 2 == 1 { f.neg(det) } else { det };
    let square = d == 0 || f.is_square(disc);
    Ok(match (d % 2 == 0, square) {
        (true, true) => WittType::Type0,
        (true, false) => WittType::TypeW,
        (false, true) => WittType::Type1,
        (false, false) => WittType::TypeD,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_forms_have_their_types() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let f = FieldTable::new(q).unwrap();
            for dim in [2usize, 4] {
                for sign in [Sign::Plus, Sign::Minus] {
                    FormSpec::orthogonal(dim, sign, &f).unwrap();
                }
            }
        }
    }

    #[test]
    fn documented_witt_types() {
        let f = FieldTable::new(3).unwrap();
        let plane = FormSpec::orthogonal(2, Sign::Plus, &f).unwrap();
        let basis = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(witt_type(&plane.restricted_gram(&basis, &f), &f).unwrap(), WittType::Type0);
        let minus = FormSpec::orthogonal(2, Sign::Minus, &f).unwrap();
        assert_eq!(witt_type(&minus.restricted_gram(&basis, &f), &f).unwrap(), WittType::TypeW);
        let odd = FormSpec::orthogonal(3, Sign::Plus, &f).unwrap();
        let all3 = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert_eq!(witt_type(&odd.restricted_gram(&all3, &f), &f).unwrap(), WittType::Type1);
        // <x^2 - delta ...> restricted to the last coordinate: delta-type line
        assert_eq!(witt_type(&Mat::from_rows(1, vec![2]), &f).unwrap(), WittType::TypeD);
    }

    #[test]
    fn minus_plane_inside_plus_four_space() {
        let f = FieldTable::new(3).unwrap();
        let form = FormSpec::orthogonal(4, Sign::Plus, &f).unwrap();
        // e1 + e2 has Q = 1, e3 - e4... find a 2-space of type w
        let found = all_vectors(4, 3).into_iter().any(|v| {
            all_vectors(4, 3).into_iter().any(|w| {
                let g = form.restricted_gram(&[v.clone(), w.clone()], &f);
                g.det(&f) != 0 && witt_type(&g, &f).unwrap() == WittType::TypeW
            })
        });
        assert!(found);
    }
}
