//! Explicit isometry groups, closures and derived subgroups.

use std::collections::HashSet;

use atlas_orders::{order_int, CharParity, Family, GroupSpec, PrimePower, Sign};
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{Elt, FieldTable};
use crate::form::{FormKind, FormSpec};
use crate::linalg::{all_vectors, Mat};
use crate::OracleError;

/// Default ceiling on the number of elements enumerated.
pub const DEFAULT_CAP: u64 = 1_000_000;

/// The cap, overridable through `INVOLUTION_ATLAS_CAP`.
pub fn cap_from_env() -> u64 {
    std::env::var("INVOLUTION_ATLAS_CAP").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_CAP)
}

/// A finite matrix group stored element by element.
#[derive(Clone, Debug)]
pub struct Group {
    dim: usize,
    elements: Vec<Mat>,
    lookup: HashSet<Mat>,
}

impl Group {
    pub fn from_elements(dim: usize, elements: Vec<Mat>) -> Self {
        let lookup = elements.iter().cloned().collect();
        Group { dim, elements, lookup }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Mat] {
        &self.elements
    }

    pub fn contains(&self, g: &Mat) -> bool {
        self.lookup.contains(g)
    }

    pub fn filter(&self, keep: impl Fn(&Mat) -> bool) -> Group {
        Group::from_elements(self.dim, self.elements.iter().filter(|g| keep(g)).cloned().collect())
    }

    /// Subgroup generated by `gens`: the orbit of the identity under right
    /// multiplication, which for a finite group is the generated subgroup.
    pub fn closure(dim: usize, gens: &[Mat], f: &FieldTable, cap: u64) -> Result<Group, OracleError> {
        let id = Mat::identity(dim);
        let mut seen: HashSet<Mat> = HashSet::from([id.clone()]);
        let mut elements = vec![id];
        let mut next = 0;
        while next < elements.len() {
            let x = elements[next].clone();
            next += 1;
            for s in gens {
                let y = x.mul(s, f);
                if seen.insert(y.clone()) {
                    elements.push(y);
                    if elements.len() as u64 > cap {
                        return Err(OracleError::CapExceeded { estimate: elements.len().into(), cap });
                    }
                }
            }
        }
        Ok(Group { dim, elements, lookup: seen })
    }

    /// A small generating set, drawn by a seeded generator.
    pub fn generators(&self, f: &FieldTable, seed: u64) -> Result<Vec<Mat>, OracleError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut gens = Vec::new();
        let mut span = Group::closure(self.dim, &gens, f, u64::MAX)?;
        while span.order() < self.order() {
            let g = &self.elements[rng.random_range(0..self.order())];
            if !span.contains(g) {
                gens.push(g.clone());
                span = Group::closure(self.dim, &gens, f, u64::MAX)?;
            }
        }
        Ok(gens)
    }

    /// Commutator subgroup: normal closure of the commutators of a
    /// generating set.
    pub fn derived_subgroup(&self, f: &FieldTable) -> Result<Group, OracleError> {
        let gens = self.generators(f, 0x5eed)?;
        let inv: Vec<Mat> = gens.iter().map(|g| g.inverse(f).expect("invertible")).collect();
        let mut hgens = Vec::new();
        for i in 0..gens.len() {
            for j in 0..i {
                let c = inv[i].mul(&inv[j], f).mul(&gens[i], f).mul(&gens[j], f);
                if !c.is_identity() {
                    hgens.push(c);
                }
            }
        }
        let mut h = Group::closure(self.dim, &hgens, f, u64::MAX)?;
        loop {
            let mut grew = false;
            for (s, s_inv) in gens.iter().zip(&inv) {
                for k in 0..hgens.len() {
                    let c = s_inv.mul(&hgens[k], f).mul(s, f);
                    if !h.contains(&c) {
                        hgens.push(c);
                        h = Group::closure(self.dim, &hgens, f, u64::MAX)?;
                        grew = true;
                    }
                }
            }
            if !grew {
                return Ok(h);
            }
        }
    }
}

/// The full isometry group of a form, with its form.
#[derive(Clone, Debug)]
pub struct IsometryGroup {
    pub form: FormSpec,
    pub group: Group,
}

/// Family and order the form's isometry group should have.
pub fn expected_spec(form: &FormSpec, parity: CharParity) -> Result<GroupSpec, OracleError> {
    let fam = match (form.kind, form.dim % 2, form.sign) {
        (FormKind::Alternating, _, _) => Family::Sp,
        (FormKind::Quadratic, 1, _) => Family::OOdd,
        (FormKind::Quadratic, _, Some(Sign::Minus)) => Family::OMinus,
        (FormKind::Quadratic, _, _) => Family::OPlus,
    };
    Ok(GroupSpec::new(fam, form.dim, parity)?)
}

/// Enumerate every isometry by choosing images of the basis vectors one at
/// a time, each consistent with the form values already fixed.
pub fn build_isometry_group(form: &FormSpec, f: &FieldTable, cap: u64) -> Result<IsometryGroup, OracleError> {
    let q = PrimePower::new(f.q() as u64)?;
    let spec = expected_spec(form, f.parity())?;
    let order = order_int(&spec, q)?;
    let Some(expected) = order.to_u64().filter(|&e| e <= cap) else {
        return Err(OracleError::CapExceeded { estimate: order, cap });
    };
    let n = form.dim;
    let vectors = all_vectors(n, f.q());
    let qvals: Vec<Elt> = vectors.iter().map(|v| form.q_value(v, f)).collect();
    let mut found = Vec::new();
    let mut images: Vec<usize> = Vec::with_capacity(n);
    // polar * image, per fixed image, so B(v, w_j) is a dot product
    let mut functionals: Vec<Vec<Elt>> = Vec::with_capacity(n);
    search(form, f, &vectors, &qvals, &mut images, &mut functionals, &mut found);
    if found.len() as u64 != expected {
        return Err(OracleError::OrderMismatch { built: found.len() as u64, expected });
    }
    let group = Group::from_elements(n, found);
    spot_check_closure(&group, f)?;
    Ok(IsometryGroup { form: form.clone(), group })
}

fn search(
    form: &FormSpec,
    f: &FieldTable,
    vectors: &[Vec<Elt>],
    qvals: &[Elt],
    images: &mut Vec<usize>,
    functionals: &mut Vec<Vec<Elt>>,
    found: &mut Vec<Mat>,
) {
    let i = images.len();
    let n = form.dim;
    if i == n {
        let cols: Vec<Vec<Elt>> = images.iter().map(|&k| vectors[k].clone()).collect();
        found.push(Mat::from_columns(&cols));
        return;
    }
    let target_q = form.coeff.get(i, i);
    for (k, v) in vectors.iter().enumerate() {
        if form.kind == FormKind::Quadratic && qvals[k] != target_q {
            continue;
        }
        let ok = functionals.iter().enumerate().all(|(j, lf)| {
            let b = v.iter().zip(lf).fold(0, |acc, (&a, &c)| f.add(acc, f.mul(a, c)));
            b == form.polar.get(i, j)
        });
        if !ok || v.iter().all(|&x| x == 0) {
            continue;
        }
        images.push(k);
        functionals.push(form.polar.apply(v, f));
        search(form, f, vectors, qvals, images, functionals, found);
        images.pop();
        functionals.pop();
    }
}

fn spot_check_closure(g: &Group, f: &FieldTable) -> Result<(), OracleError> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..256.min(g.order() * g.order()) {
        let a = &g.elements[rng.random_range(0..g.order())];
        let b = &g.elements[rng.random_range(0..g.order())];
        if !g.contains(&a.mul(b, f)) || !g.contains(&a.inverse(f).expect("invertible")) {
            return Err(OracleError::NotClosed);
        }
    }
    Ok(())
}

/// `x -> x - B(x,v)/Q(v) v`: a reflection for `q` odd, a transvection for `q` even.
pub fn reflection(form: &FormSpec, v: &[Elt], f: &FieldTable) -> Mat {
    let n = form.dim;
    let qv = form.q_value(v, f);
    let s = f.inv(qv);
    let cols: Vec<Vec<Elt>> = (0..n)
        .map(|j| {
            let mut e = vec![0; n];
            e[j] = 1;
            let c = f.mul(form.bilinear(&e, v, f), s);
            e.iter().zip(v).map(|(&x, &y)| f.sub(x, f.mul(c, y))).collect()
        })
        .collect();
    Mat::from_columns(&cols)
}

/// Products of two reflections whose vectors have `Q` values in the same
/// square class, as generators.
pub fn paired_reflections(form: &FormSpec, f: &FieldTable) -> Vec<Mat> {
    let nonsingular: Vec<Vec<Elt>> =
        all_vectors(form.dim, f.q()).into_iter().filter(|v| form.q_value(v, f) != 0).collect();
    let class = |v: &Vec<Elt>| f.is_square(form.q_value(v, f));
    let mut gens = Vec::new();
    for anchor_class in [true, false] {
        let Some(anchor) = nonsingular.iter().find(|v| class(v) == anchor_class) else { continue };
        let r0 = reflection(form, anchor, f);
        for v in nonsingular.iter().filter(|v| class(v) == anchor_class) {
            let g = r0.mul(&reflection(form, v, f), f);
            if !g.is_identity() {
                gens.push(g);
            }
        }
    }
    gens
}
