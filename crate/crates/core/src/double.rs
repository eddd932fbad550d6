//! The double `D = G ⋈ G*`, its canonical pairing and Manin pairs.

use crate::error::{Error, Result};
use crate::exterior::{contract_by_dual, Blade, Multivector, SpaceId};
use crate::lie::{require_lie, BracketTable};
use crate::matrix::Matrix;
use crate::names::BasisNames;
use crate::quasi::{from_r_matrix, validate, QuasiLieBialgebra};
use crate::report::{Check, ValidationReport};
use crate::scalar::{self, Scalar};

/// `D = G ⊕ G*` with basis `e_1..e_n, ξ^1..ξ^n` (indices `0..n` and `n..2n`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleAlgebra {
    n: usize,
    names: BasisNames,
    bracket: BracketTable,
}

impl DoubleAlgebra {
    /// Wraps a bracket on `D(n)`; the pairing is always the hyperbolic form.
    pub fn from_bracket(bracket: BracketTable, names: BasisNames) -> Result<Self> {
        let SpaceId::Double(n) = bracket.space() else {
            return Err(Error::Invalid(format!("expected a bracket on the double, got {}", bracket.space())));
        };
        Ok(DoubleAlgebra { n, names, bracket })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn space(&self) -> SpaceId {
        SpaceId::Double(self.n)
    }

    pub fn names(&self) -> &BasisNames {
        &self.names
    }

    pub fn bracket(&self) -> &BracketTable {
        &self.bracket
    }

    /// `⟨ξ + x, y + η⟩ = ξ(y) + η(x)`.
    pub fn pairing(&self) -> Matrix {
        hyperbolic_pairing(self.n)
    }

    pub fn basis(&self, k: usize) -> Multivector {
        Multivector::basis(self.space(), k)
    }

    /// `⟨u, v⟩` for vectors of `D`.
    pub fn pair(&self, u: &Multivector, v: &Multivector) -> Scalar {
        let mut s = scalar::zero();
        for (a, ca) in u.terms() {
            let i = a.bits().trailing_zeros() as usize;
            let partner = if i < self.n { i + self.n } else { i - self.n };
            s += ca * v.coeff(Blade::basis(partner));
        }
        s
    }
}

/// The `2n × 2n` matrix of the canonical pairing in the `e/ξ` basis.
pub fn hyperbolic_pairing(n: usize) -> Matrix {
    let mut p = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        p.set(i, n + i, scalar::one());
        p.set(n + i, i, scalar::one());
    }
    p
}

/// Assembles the bracket of `D` without validating `q`:
/// `[x, y]_D = μ(x, y)`, `[x, ξ]_D = -ad^{γ*}_ξ x + ad^{μ*}_x ξ`,
/// `[ξ, η]_D = γ(ξ, η) + q.phi_pair(ξ, η)`.
pub fn assemble(q: &QuasiLieBialgebra) -> DoubleAlgebra {
    let n = q.dim();
    let space = SpaceId::Double(n);
    let shift = |v: &Multivector, by: usize| {
        Multivector::from_terms(space, v.terms().map(|(b, c)| (Blade::from_bits(b.bits() << by), c.clone())))
            .expect("in range")
    };
    let dphi = q.double_phi();
    let bracket = BracketTable::from_fn(space, |i, j| match (i < n, j < n) {
        (true, true) => shift(q.mu().bracket(i, j), 0),
        (true, false) => mixed(q, i, j - n),
        (false, true) => -&mixed(q, j, i - n),
        (false, false) => {
            let (a, b) = (i - n, j - n);
            let xi = Multivector::basis(q.dual(), a).wedge(&Multivector::basis(q.dual(), b));
            shift(q.gamma().bracket(a, b), n) + shift(&contract_by_dual(&xi, &dphi).expect("dual"), 0)
        }
    });
    DoubleAlgebra { n, names: q.names().clone(), bracket }
}

/// `[e_i, ξ^a]_D`: `ξ^k` coefficient `-μ(i,k)_a`, `e_k` coefficient `γ(a,k)_i`.
fn mixed(q: &QuasiLieBialgebra, i: usize, a: usize) -> Multivector {
    let n = q.dim();
    let mut v = Multivector::zero(SpaceId::Double(n));
    for k in 0..n {
        v.add_term(Blade::basis(n + k), -q.mu().constant(i, k, a));
        v.add_term(Blade::basis(k), q.gamma().constant(a, k, i));
    }
    v
}

/// The double of a structure that passes [`validate`].
pub fn build_double(q: &QuasiLieBialgebra) -> Result<DoubleAlgebra> {
    let report = validate(q);
    if !report.passed() {
        return Err(Error::InvalidStructure { failed: report.failure_summary() });
    }
    Ok(assemble(q))
}

/// A basis triple violating `⟨[u,v], w⟩ + ⟨v, [u,w]⟩ = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceWitness {
    pub triple: [usize; 3],
    pub value: Scalar,
}

/// First violation of invariance of the pairing, in lexicographic order.
pub fn invariance_defect(d: &DoubleAlgebra) -> Option<InvarianceWitness> {
    let m = d.dim();
    for u in 0..m {
        for v in 0..m {
            for w in 0..m {
                let value = d.pair(d.bracket.bracket(u, v), &d.basis(w)) + d.pair(&d.basis(v), d.bracket.bracket(u, w));
                if value != scalar::zero() {
                    return Some(InvarianceWitness { triple: [u, v, w], value });
                }
            }
        }
    }
    None
}

pub fn verify_invariance(d: &DoubleAlgebra) -> bool {
    invariance_defect(d).is_none()
}

/// A subspace of `D` given by the rows of a `k × 2n` matrix, with the
/// outcome of the three Manin-pair conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManinPairWitness {
    pub basis: Matrix,
    pub closed: bool,
    pub isotropic: bool,
    pub maximal: bool,
}

impl ManinPairWitness {
    pub fn evaluate(d: &DoubleAlgebra, basis: Matrix) -> Self {
        let report = manin_report(d, &basis);
        let ok = |name: &str| report.item(name).is_some_and(|i| i.passed);
        ManinPairWitness { closed: ok("closed"), isotropic: ok("isotropic"), maximal: ok("maximal"), basis }
    }
}

/// Rows `e_1..e_n`.
pub fn primal_subspace(n: usize) -> Matrix {
    unit_rows(n, 0)
}

/// Rows `ξ^1..ξ^n`.
pub fn dual_subspace(n: usize) -> Matrix {
    unit_rows(n, n)
}

fn unit_rows(n: usize, offset: usize) -> Matrix {
    Matrix::from_rows(
        (0..n).map(|i| (0..2 * n).map(|j| if j == offset + i { scalar::one() } else { scalar::zero() }).collect()).collect(),
    )
}

fn row_vector(d: &DoubleAlgebra, m: &Matrix, i: usize) -> Multivector {
    Multivector::vector(d.space(), m.row(i))
}

/// Closure under the bracket, total isotropy and dimension `n`.
pub fn verify_manin_pair(d: &DoubleAlgebra, w: &ManinPairWitness) -> ValidationReport {
    manin_report(d, &w.basis)
}

fn manin_report(d: &DoubleAlgebra, basis: &Matrix) -> ValidationReport {
    let names = d.names();
    let mut report = ValidationReport::new("manin pair");
    let k = basis.rows();
    let rank = if k == 0 { 0 } else { basis.rank() };
    let rows: Vec<Multivector> = (0..k).map(|i| row_vector(d, basis, i)).collect();
    let mut closed = Check::new("closed", "[u, v]_D lies in the subspace", names);
    for i in 0..k {
        for j in i + 1..k {
            let w = d.bracket.bracket_vectors(&rows[i], &rows[j]);
            let mut ext: Vec<Vec<Scalar>> = (0..k).map(|r| basis.row(r).to_vec()).collect();
            ext.push((0..d.dim()).map(|c| w.coeff(Blade::basis(c))).collect());
            let inside = Matrix::from_rows(ext).rank() == rank;
            closed.require(|| format!("u{}, u{}", i + 1, j + 1), inside, || (names.show(&w), "element of the subspace".into()));
        }
    }
    report.push(closed.finish());
    let mut iso = Check::new("isotropic", "<u, v> = 0 on the subspace", names);
    for i in 0..k {
        for j in i..k {
            let v = d.pair(&rows[i], &rows[j]);
            iso.compare(|| format!("u{}, u{}", i + 1, j + 1), &v, &scalar::zero());
        }
    }
    report.push(iso.finish());
    let mut max = Check::new("maximal", "dimension of the subspace equals n", names);
    max.compare(|| "dimension".into(), &scalar::int(rank as i64), &scalar::int(d.n as i64));
    report.push(max.finish());
    report
}

/// `r = ½ Σ e_i ∧ ξ^i`.
pub fn canonical_r(d: &DoubleAlgebra) -> Multivector {
    let mut r = Multivector::zero(d.space());
    for i in 0..d.n {
        r += &Multivector::from_indices(d.space(), &[i, d.n + i], scalar::frac(1, 2));
    }
    r
}

/// The exact structure `(D, r)` with `r` the canonical element, as a
/// quasi-bialgebra over the `2n`-dimensional space `D`.
pub fn double_qlb(d: &DoubleAlgebra) -> Result<QuasiLieBialgebra> {
    let m = d.dim();
    let table = d.bracket.with_space(SpaceId::Primal(m));
    require_lie(&table)?;
    let r = canonical_r(d).with_space(SpaceId::Primal(m));
    from_r_matrix(&table, &r)?.with_names(d.names.double())
}

/// The structure on `G` defined by an isotropic complement of `G` in `D`,
/// given by the rows of an `n × 2n` matrix.
pub fn from_manin_pair(d: &DoubleAlgebra, complement: &Matrix) -> Result<QuasiLieBialgebra> {
    let n = d.n;
    if complement.rows() != n || complement.cols() != 2 * n {
        return Err(Error::Invalid(format!("complement must be a {n} x {} matrix", 2 * n)));
    }
    let rows: Vec<Multivector> = (0..n).map(|i| row_vector(d, complement, i)).collect();
    for i in 0..n {
        for j in i..n {
            let v = d.pair(&rows[i], &rows[j]);
            if v != scalar::zero() {
                return Err(Error::NotIsotropic { pair: [i, j], value: scalar::format(&v) });
            }
        }
    }
    // ξ-parts m[a][i] = <u_a, e_i>; invertible iff the rows complement G.
    let m = Matrix::from_rows((0..n).map(|a| (0..n).map(|i| complement.get(a, n + i).clone()).collect()).collect());
    if m.rank() != n {
        return Err(Error::NotComplementary);
    }
    // Dual basis u^a = Σ_b inv[a][b] u_b, so that <u^a, e_i> = δ_ai.
    let inv = inverse(&m);
    let dual: Vec<Multivector> = (0..n)
        .map(|a| {
            let mut v = Multivector::zero(d.space());
            for (b, row) in rows.iter().enumerate() {
                v.add_scaled(inv.get(a, b), row);
            }
            v
        })
        .collect();
    let g = SpaceId::Primal(n);
    let mut mu = BracketTable::zero(g);
    for i in 0..n {
        for j in i + 1..n {
            for (b, c) in d.bracket.bracket(i, j).terms() {
                let k = b.bits().trailing_zeros() as usize;
                if k >= n {
                    return Err(Error::Invalid("G is not a subalgebra of the double".into()));
                }
                mu.add_constant(i, j, k, c.clone());
            }
        }
    }
    let mut gamma = BracketTable::zero(SpaceId::Dual(n));
    let mut phi_d = Multivector::zero(g);
    for a in 0..n {
        for b in a + 1..n {
            let w = d.bracket.bracket_vectors(&dual[a], &dual[b]);
            let mut rest = w.clone();
            for (c, dc) in dual.iter().enumerate() {
                let coeff = w.coeff(Blade::basis(n + c));
                gamma.add_constant(a, b, c, coeff.clone());
                rest.add_scaled(&-coeff, dc);
            }
            for k in b + 1..n {
                let c = rest.coeff(Blade::basis(k));
                phi_d += &Multivector::from_indices(g, &[a, b, k], c);
            }
        }
    }
    QuasiLieBialgebra::new(mu, gamma, -phi_d)?.with_names(d.names.primal().to_vec())
}

fn inverse(m: &Matrix) -> Matrix {
    let n = m.rows();
    let cols: Vec<Vec<Scalar>> = (0..n)
        .map(|j| {
            let e: Vec<Scalar> = (0..n).map(|i| if i == j { scalar::one() } else { scalar::zero() }).collect();
            m.solve(&e).expect("invertible")
        })
        .collect();
    Matrix::from_rows((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
}
