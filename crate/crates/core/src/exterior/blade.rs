use std::fmt;

/// A basis blade: a set of basis indices stored as a bitmask, read in
/// ascending order. Signs live in the coefficient, never in the blade.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Blade(u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub const fn from_bits(bits: u32) -> Blade {
        Blade(bits)
    }

    /// The blade `e_i`.
    pub fn basis(i: usize) -> Blade {
        assert!(i < 32, "blade index {i} out of range");
        Blade(1 << i)
    }

    /// Canonical blade of `x_{i1} ∧ … ∧ x_{ik}` and the sign of sorting the
    /// factors, or `None` if an index repeats.
    pub fn from_indices(indices: &[usize]) -> Option<(i32, Blade)> {
        let mut acc = Blade::SCALAR;
        let mut sign = 1;
        for &i in indices {
            let b = Blade::basis(i);
            sign *= acc.wedge_sign(b)?;
            acc = Blade(acc.0 | b.0);
        }
        Some((sign, acc))
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }

    pub const fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub const fn is_subset_of(self, other: Blade) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn union(self, other: Blade) -> Blade {
        Blade(self.0 | other.0)
    }

    pub const fn without(self, other: Blade) -> Blade {
        Blade(self.0 & !other.0)
    }

    pub const fn intersects(self, other: Blade) -> bool {
        self.0 & other.0 != 0
    }

    /// Ascending indices.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |i| bits >> i & 1 == 1)
    }

    /// Sign of `self ∧ other` relative to the merged ascending blade, or
    /// `None` when the blades share an index.
    pub fn wedge_sign(self, other: Blade) -> Option<i32> {
        if self.intersects(other) {
            return None;
        }
        let mut swaps = 0u32;
        let mut b = other.0;
        while b != 0 {
            let j = b.trailing_zeros();
            swaps += (self.0 >> j).count_ones();
            b &= b - 1;
        }
        Some(if swaps.is_multiple_of(2) { 1 } else { -1 })
    }

    /// Sign `(-1)^{k(k-1)/2}` of reversing the factors of a grade-k blade.
    pub fn reversal_sign(self) -> i32 {
        let k = self.grade();
        if (k * k.saturating_sub(1) / 2).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// All blades of the given dimension, ascending by bitmask.
    pub fn all(dim: usize) -> impl Iterator<Item = Blade> {
        (0..1u64 << dim).map(|b| Blade(b as u32))
    }

    /// All blades of a fixed grade, ascending by bitmask.
    pub fn of_grade(dim: usize, grade: usize) -> impl Iterator<Item = Blade> {
        Blade::all(dim).filter(move |b| b.grade() == grade)
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.indices().map(|i| (i + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wedge_sign_counts_transpositions() {
        let e1 = Blade::basis(0);
        let e2 = Blade::basis(1);
        assert_eq!(e1.wedge_sign(e2), Some(1));
        assert_eq!(e2.wedge_sign(e1), Some(-1));
        assert_eq!(e1.wedge_sign(e1), None);
        assert_eq!(Blade::from_indices(&[2, 0, 1]), Some((1, Blade(7))));
        assert_eq!(Blade::from_indices(&[1, 0, 2]), Some((-1, Blade(7))));
    }

    #[test]
    fn reversal_signs() {
        let signs: Vec<i32> = (0..6).map(|k| Blade((1u32 << k) - 1).reversal_sign()).collect();
        assert_eq!(signs, vec![1, 1, -1, -1, 1, 1]);
    }
}
