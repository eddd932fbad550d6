#![allow(dead_code)]

use lqb::exterior::{Blade, Multivector, SpaceId};
use lqb::lie::BracketTable;
use lqb::scalar::{frac, int, Scalar};

pub fn g(n: usize) -> SpaceId {
    SpaceId::Primal(n)
}

pub fn table(n: usize, entries: &[(usize, usize, usize, i64)]) -> BracketTable {
    BracketTable::from_constants(g(n), entries.iter().map(|&(i, j, k, c)| (i, j, k, int(c)))).unwrap()
}

pub fn mv(space: SpaceId, terms: &[(&[usize], Scalar)]) -> Multivector {
    let mut m = Multivector::zero(space);
    for (idx, c) in terms {
        m += &Multivector::from_indices(space, idx, c.clone());
    }
    m
}

pub fn blades(space: SpaceId, terms: &[(u32, i64)]) -> Multivector {
    Multivector::from_terms(space, terms.iter().map(|&(b, c)| (Blade::from_bits(b), int(c)))).unwrap()
}

/// sl2 in the order (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
pub fn sl2() -> BracketTable {
    table(3, &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)])
}

pub const H: usize = 0;
pub const E: usize = 1;
pub const F: usize = 2;

pub fn e_wedge_f() -> Multivector {
    mv(g(3), &[(&[E, F], int(1))])
}

/// [x,y] = y, z central.
pub fn aff1r() -> BracketTable {
    table(3, &[(0, 1, 1, 1)])
}

/// [x,y] = y, [x,z] = z.
pub fn book() -> BracketTable {
    table(3, &[(0, 1, 1, 1), (0, 2, 2, 1)])
}

/// Heisenberg: [x,y] = z.
pub fn heisenberg() -> BracketTable {
    table(3, &[(0, 1, 2, 1)])
}

/// gl2 in the basis E11, E12, E21, E22.
pub fn gl2() -> BracketTable {
    let mut t = BracketTable::zero(g(4));
    for (i, j, k, c) in [(0, 1, 1, 1), (0, 2, 2, -1), (1, 2, 0, 1), (1, 2, 3, -1), (1, 3, 1, 1), (2, 3, 2, -1)] {
        t.add_constant(i, j, k, int(c));
    }
    t
}

pub fn gl2_r() -> Multivector {
    blades(g(4), &[(3, 1), (5, 2), (6, -1), (12, 1), (9, 2)])
}

pub fn half() -> Scalar {
    frac(1, 2)
}

pub mod oracle;

use lqb::QuasiLieBialgebra;

/// Converts a library multivector to the oracle's form representation.
pub fn to_form(m: &Multivector) -> oracle::Form {
    m.terms().map(|(b, c)| (b.indices().collect(), c.clone())).collect()
}

pub fn sl2_exact() -> QuasiLieBialgebra {
    lqb::quasi::from_r_matrix(&sl2(), &e_wedge_f()).unwrap().with_names(names(&["h", "e", "f"])).unwrap()
}

pub fn names(n: &[&str]) -> Vec<String> {
    n.iter().map(|s| s.to_string()).collect()
}

pub fn catalog(name: &str) -> QuasiLieBialgebra {
    lqb::io::example_catalog(name).unwrap().build().unwrap()
}

pub const CATALOG: [&str; 6] =
    ["abelian2", "heisenberg3", "sl2-bialgebra", "sl2-exact-r", "sl2-quasitriangular", "aff1r-exact"];
