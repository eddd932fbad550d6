use std::collections::BTreeMap;

use num_traits::Zero;

use super::{Blade, Multivector};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Sparse element of `⊗^rank V` with `dim V = dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    dim: usize,
    rank: usize,
    entries: BTreeMap<Vec<usize>, Scalar>,
}

impl Tensor {
    pub fn zero(dim: usize, rank: usize) -> Self {
        Tensor { dim, rank, entries: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, index: &[usize]) -> Scalar {
        self.entries.get(index).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&[usize], &Scalar)> {
        self.entries.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn add(&mut self, index: Vec<usize>, c: Scalar) {
        assert_eq!(index.len(), self.rank, "tensor index of wrong rank");
        assert!(index.iter().all(|&i| i < self.dim), "tensor index out of range");
        if c.is_zero() {
            return;
        }
        let vanished = {
            let e = self.entries.entry(index.clone()).or_insert_with(Scalar::zero);
            *e += c;
            e.is_zero()
        };
        if vanished {
            self.entries.remove(&index);
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Tensor {
        let mut t = Tensor::zero(self.dim, self.rank);
        if !c.is_zero() {
            for (k, v) in &self.entries {
                t.entries.insert(k.clone(), v * c);
            }
        }
        t
    }

    /// `self - other`.
    pub fn sub(&self, other: &Tensor) -> Tensor {
        assert_eq!((self.dim, self.rank), (other.dim, other.rank));
        let mut t = self.clone();
        for (k, v) in &other.entries {
            t.add(k.clone(), -v.clone());
        }
        t
    }

    /// Embeds a homogeneous multivector of grade k as the full signed sum
    /// `x1∧…∧xk ↦ Σ_σ sign(σ) x_σ(1) ⊗ … ⊗ x_σ(k)` (no normalization).
    pub fn from_multivector(x: &Multivector, rank: usize) -> Tensor {
        let mut t = Tensor::zero(x.space().dim(), rank);
        for (b, c) in x.terms() {
            assert_eq!(b.grade(), rank, "embedding needs a homogeneous element");
            let idx: Vec<usize> = b.indices().collect();
            for (perm, s) in permutations(rank) {
                let key: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
                t.add(key, if s < 0 { -c.clone() } else { c.clone() });
            }
        }
        t
    }

    /// Coefficients on ascending index tuples, as a multivector over `space`.
    /// Only meaningful for antisymmetric tensors.
    pub fn antisymmetric_part_as_multivector(&self, space: super::SpaceId) -> Multivector {
        let mut m = Multivector::zero(space);
        for (k, v) in &self.entries {
            if k.windows(2).all(|w| w[0] < w[1]) {
                let (_, b) = Blade::from_indices(k).expect("ascending");
                m.add_term(b, v.clone());
            }
        }
        m
    }

    /// Applies a linear map `V → ⊗^m V` to slot `slot`, producing a tensor
    /// of rank `rank + m - 1` with the image inserted at that slot.
    pub fn apply_to_slot<F>(&self, slot: usize, image_rank: usize, f: F) -> Tensor
    where
        F: Fn(usize) -> Tensor,
    {
        let mut t = Tensor::zero(self.dim, self.rank + image_rank - 1);
        for (k, v) in &self.entries {
            let img = f(k[slot]);
            for (ik, iv) in img.entries() {
                let mut key = k[..slot].to_vec();
                key.extend_from_slice(ik);
                key.extend_from_slice(&k[slot + 1..]);
                t.add(key, v * iv);
            }
        }
        t
    }
}

/// All permutations of `0..k` with their signs, in lexicographic order.
pub fn permutations(k: usize) -> Vec<(Vec<usize>, i32)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, k: usize, out: &mut Vec<(Vec<usize>, i32)>) {
        if prefix.len() == k {
            let mut inv = 0;
            for i in 0..k {
                for j in i + 1..k {
                    if prefix[i] > prefix[j] {
                        inv += 1;
                    }
                }
            }
            out.push((prefix.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for i in 0..k {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, k, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], k, &mut out);
    out
}

/// Smallest and largest tensor rank accepted by [`alt`].
pub const ALT_MIN_RANK: usize = 2;
pub const ALT_MAX_RANK: usize = 4;

/// The alternator `Σ_σ sign(σ) x_σ(1) ⊗ … ⊗ x_σ(r)`, unnormalized.
pub fn alt(t: &Tensor) -> Result<Tensor> {
    if !(ALT_MIN_RANK..=ALT_MAX_RANK).contains(&t.rank) {
        return Err(Error::TensorRank { rank: t.rank, min: ALT_MIN_RANK, max: ALT_MAX_RANK });
    }
    let perms = permutations(t.rank);
    let mut out = Tensor::zero(t.dim, t.rank);
    for (k, v) in &t.entries {
        for (p, s) in &perms {
            let key: Vec<usize> = p.iter().map(|&i| k[i]).collect();
            out.add(key, if *s < 0 { -v.clone() } else { v.clone() });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::SpaceId;
    use crate::scalar::int;

    #[test]
    fn alt_rank_two() {
        let mut t = Tensor::zero(2, 2);
        t.add(vec![0, 1], int(1));
        let a = alt(&t).unwrap();
        assert_eq!(a.get(&[0, 1]), int(1));
        assert_eq!(a.get(&[1, 0]), int(-1));
        let mut s = Tensor::zero(2, 2);
        s.add(vec![1, 1], int(3));
        assert!(alt(&s).unwrap().is_zero());
    }

    #[test]
    fn alt_rank_three_has_six_terms() {
        let mut t = Tensor::zero(3, 3);
        t.add(vec![0, 1, 2], int(1));
        let a = alt(&t).unwrap();
        assert_eq!(a.entries().count(), 6);
        assert_eq!(a.get(&[1, 0, 2]), int(-1));
        assert_eq!(a.get(&[1, 2, 0]), int(1));
    }

    #[test]
    fn alt_rejects_rank_one_and_five() {
        assert!(alt(&Tensor::zero(3, 1)).is_err());
        assert!(alt(&Tensor::zero(3, 5)).is_err());
    }

    #[test]
    fn embedding_roundtrip() {
        let x = Multivector::from_indices(SpaceId::Primal(3), &[0, 2], int(5));
        let t = Tensor::from_multivector(&x, 2);
        assert_eq!(t.get(&[2, 0]), int(-5));
        assert_eq!(t.antisymmetric_part_as_multivector(SpaceId::Primal(3)), x);
    }
}
