//! Brute-force recomputation of sl2 values from raw structure constants.
//! Shares nothing with the library beyond the rational type.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;
/// Sorted index list to coefficient.
pub type Form = BTreeMap<Vec<usize>, Q>;

pub fn q(v: i64) -> Q {
    Q::from_integer(v.into())
}

/// `c[i][j][k]`: coefficient of `e_k` in `[e_i, e_j]`, fully antisymmetric in `i, j`.
pub struct Constants {
    pub n: usize,
    pub c: Vec<Vec<Vec<Q>>>,
}

impl Constants {
    pub fn new(n: usize, entries: &[(usize, usize, usize, i64)]) -> Self {
        let mut c = vec![vec![vec![Q::zero(); n]; n]; n];
        for &(i, j, k, v) in entries {
            c[i][j][k] += q(v);
            c[j][i][k] -= q(v);
        }
        Constants { n, c }
    }

    /// Order (h, e, f).
    pub fn sl2() -> Self {
        Constants::new(3, &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)])
    }
}

/// Adds `c · v_{idx[0]} ∧ v_{idx[1]} ∧ ...`, sorting by bubble sort.
pub fn add_wedge(form: &mut Form, idx: &[usize], c: Q) {
    let mut v = idx.to_vec();
    let mut sign = Q::one();
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] == v[j + 1] {
                return;
            }
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return;
    }
    let e = form.entry(v).or_insert_with(Q::zero);
    *e += sign * c;
}

pub fn clean(mut f: Form) -> Form {
    f.retain(|_, v| !v.is_zero());
    f
}

/// `[e_i, X]` for a form `X`, by the Leibniz rule on each factor.
pub fn ad(k: &Constants, i: usize, x: &Form) -> Form {
    let mut out = Form::new();
    for (idx, c) in x {
        for slot in 0..idx.len() {
            for m in 0..k.n {
                let a = &k.c[i][idx[slot]][m];
                if a.is_zero() {
                    continue;
                }
                let mut w = idx.clone();
                w[slot] = m;
                add_wedge(&mut out, &w, c * a);
            }
        }
    }
    clean(out)
}

/// Schouten bracket of two bivectors from
/// `[a∧b, c∧d] = [a,c]∧b∧d − [a,d]∧b∧c − [b,c]∧a∧d + [b,d]∧a∧c`.
pub fn schouten_bivectors(k: &Constants, x: &Form, y: &Form) -> Form {
    let mut out = Form::new();
    for (p, cx) in x {
        for (r, cy) in y {
            let (a, b, c, d) = (p[0], p[1], r[0], r[1]);
            for (s, u, v, w1, w2) in [(1, a, c, b, d), (-1, a, d, b, c), (-1, b, c, a, d), (1, b, d, a, c)] {
                for m in 0..k.n {
                    let t = &k.c[u][v][m];
                    if !t.is_zero() {
                        add_wedge(&mut out, &[m, w1, w2], q(s) * t * cx * cy);
                    }
                }
            }
        }
    }
    clean(out)
}

/// Dual bracket table on `G*` with `⟨γ(x), ξ∧η⟩ = −⟨x, [ξ, η]⟩`:
/// `g[a][b][k] = −(coefficient of e_a∧e_b in γ(e_k))` for `a < b`.
pub fn dual_table(n: usize, cocycle: &[Form]) -> Vec<Vec<Vec<Q>>> {
    let mut g = vec![vec![vec![Q::zero(); n]; n]; n];
    for (k, gk) in cocycle.iter().enumerate() {
        for (idx, c) in gk {
            g[idx[0]][idx[1]][k] -= c;
            g[idx[1]][idx[0]][k] += c;
        }
    }
    g
}

/// `v ↦ tr(ad_v)` for a full structure-constant cube.
pub fn trace_character(c: &[Vec<Vec<Q>>]) -> Vec<Q> {
    (0..c.len()).map(|i| (0..c.len()).map(|k| c[i][k][k].clone()).sum()).collect()
}

pub fn form(entries: &[(&[usize], i64)]) -> Form {
    let mut f = Form::new();
    for (idx, c) in entries {
        add_wedge(&mut f, idx, q(*c));
    }
    clean(f)
}

/// The values the exact sl2 structure of `r = e∧f` yields.
pub struct Sl2Exact {
    pub cocycle: Vec<Form>,
    pub phi: Form,
    pub gamma: Vec<Vec<Vec<Q>>>,
    pub x_gamma: Vec<Q>,
    pub xi_mu: Vec<Q>,
}

pub fn sl2_exact() -> Sl2Exact {
    let k = Constants::sl2();
    let r = form(&[(&[1, 2], 1)]);
    let cocycle: Vec<Form> = (0..3).map(|i| ad(&k, i, &r)).collect();
    let phi = clean(schouten_bivectors(&k, &r, &r).into_iter().map(|(i, c)| (i, -c / q(2))).collect());
    let gamma = dual_table(3, &cocycle);
    let x_gamma = trace_character(&gamma);
    let xi_mu = trace_character(&k.c);
    Sl2Exact { cocycle, phi, gamma, x_gamma, xi_mu }
}
