//! Root data, Weyl groups and alternants for types B, C and D.
//!
//! All vectors here are doubled so that the half-integral Weyl vector of
//! type B stays integral: a weight `lambda` is stored as `2 * lambda`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::{DivisionError, LaurentPolynomial};
use crate::modification::{Family, GroupContext};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootSystem {
    /// `SO(2l+1)`
    B(usize),
    /// `Sp(2l)`
    C(usize),
    /// `SO(2l)`
    D(usize),
}

impl RootSystem {
    pub fn of(ctx: &GroupContext) -> Self {
        let l = ctx.rank();
        match ctx.family() {
            Family::Sp => RootSystem::C(l),
            _ if ctx.dimension() % 2 == 1 => RootSystem::B(l),
            _ => RootSystem::D(l),
        }
    }

    pub fn rank(&self) -> usize {
        match *self {
            RootSystem::B(l) | RootSystem::C(l) | RootSystem::D(l) => l,
        }
    }

    /// Twice the Weyl vector.
    pub fn rho_doubled(&self) -> Vec<i64> {
        let l = self.rank() as i64;
        (1..=l)
            .map(|j| match self {
                RootSystem::B(_) => 2 * (l - j) + 1,
                RootSystem::C(_) => 2 * (l - j + 1),
                RootSystem::D(_) => 2 * (l - j),
            })
            .collect()
    }

    pub fn positive_roots(&self) -> Vec<Vec<i64>> {
        let l = self.rank();
        let unit = |i: usize, s: i64| {
            let mut v = vec![0; l];
            v[i] = s;
            v
        };
        let mut roots = Vec::new();
        for i in 0..l {
            for j in i + 1..l {
                let mut minus = unit(i, 1);
                minus[j] = -1;
                let mut plus = unit(i, 1);
                plus[j] = 1;
                roots.push(minus);
                roots.push(plus);
            }
            match self {
                RootSystem::B(_) => roots.push(unit(i, 1)),
                RootSystem::C(_) => roots.push(unit(i, 2)),
                RootSystem::D(_) => {}
            }
        }
        roots
    }

    /// Signed permutations, restricted to an even number of sign changes
    /// for type D.
    pub fn weyl_group(&self) -> Vec<WeylElement> {
        let l = self.rank();
        let mut out = Vec::new();
        for perm in permutations(l) {
            let perm_sign = permutation_sign(&perm);
            for mask in 0u32..(1 << l) {
                if matches!(self, RootSystem::D(_)) && mask.count_ones() % 2 == 1 {
                    continue;
                }
                let signs: Vec<i64> = (0..l).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
                let flips = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
                out.push(WeylElement {
                    perm: perm.clone(),
                    signs,
                    det: perm_sign * flips,
                });
            }
        }
        out
    }

    /// Dominance for a (doubled or plain) weight of this type.
    pub fn is_dominant(&self, weight: &[i64]) -> bool {
        let l = weight.len();
        if l != self.rank() {
            return false;
        }
        let decreasing = weight.windows(2).all(|w| w[0] >= w[1]);
        match self {
            RootSystem::B(_) | RootSystem::C(_) => decreasing && weight.last().is_none_or(|&x| x >= 0),
            RootSystem::D(_) => {
                l < 2 || (weight[..l - 1].windows(2).all(|w| w[0] >= w[1]) && weight[l - 2] >= weight[l - 1].abs())
            }
        }
    }

    /// `sum_w det(w) x^{w v}` for a doubled vector `v`.
    pub fn alternant(&self, v: &[i64]) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero(self.rank());
        for w in self.weyl_group() {
            out.add_term(w.act(v), BigInt::from(w.det));
        }
        out
    }

    /// Weyl character of the dominant weight `lambda` (plain, not doubled),
    /// in doubled exponents.
    pub fn character(&self, lambda: &[i64]) -> Result<LaurentPolynomial, DivisionError> {
        let rho = self.rho_doubled();
        let shifted: Vec<i64> = lambda.iter().zip(&rho).map(|(a, r)| 2 * a + r).collect();
        self.alternant(&shifted).div_exact(&self.alternant(&rho))
    }

    /// Weyl dimension formula for the dominant weight `lambda` (plain).
    pub fn dimension(&self, lambda: &[i64]) -> BigUint {
        let rho = self.rho_doubled();
        let shifted: Vec<i64> = lambda.iter().zip(&rho).map(|(a, r)| 2 * a + r).collect();
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for root in self.positive_roots() {
            let dot = |v: &[i64]| v.iter().zip(&root).map(|(a, b)| a * b).sum::<i64>();
            num *= dot(&shifted);
            den *= dot(&rho);
        }
        let (q, r) = num.div_rem(&den);
        assert!(r.is_zero() && !q.is_negative(), "Weyl dimension must be a nonnegative integer");
        q.magnitude().clone()
    }
}

/// `v -> (signs[i] * v[perm[i]])_i`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    pub perm: Vec<usize>,
    pub signs: Vec<i64>,
    pub det: i64,
}

impl WeylElement {
    pub fn act(&self, v: &[i64]) -> Vec<i64> {
        self.perm.iter().zip(&self.signs).map(|(&p, &s)| s * v[p]).collect()
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for smaller in permutations(n - 1) {
        for pos in 0..n {
            let mut p = smaller.clone();
            p.insert(pos, n - 1);
            out.push(p);
        }
    }
    out
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        assert_eq!(RootSystem::B(3).weyl_group().len(), 48);
        assert_eq!(RootSystem::C(2).weyl_group().len(), 8);
        assert_eq!(RootSystem::D(4).weyl_group().len(), 192);
        assert_eq!(RootSystem::D(1).weyl_group().len(), 1);
    }

    #[test]
    fn root_counts() {
        assert_eq!(RootSystem::B(3).positive_roots().len(), 9);
        assert_eq!(RootSystem::C(3).positive_roots().len(), 9);
        assert_eq!(RootSystem::D(3).positive_roots().len(), 6);
    }

    #[test]
    fn known_dimensions() {
        assert_eq!(RootSystem::B(2).dimension(&[2, 1]), 35u32.into());
        assert_eq!(RootSystem::B(2).dimension(&[1, 0]), 5u32.into());
        assert_eq!(RootSystem::C(2).dimension(&[1, 0]), 4u32.into());
        assert_eq!(RootSystem::D(2).dimension(&[3, 2]), 12u32.into());
        assert_eq!(RootSystem::D(2).dimension(&[3, -2]), 12u32.into());
        assert_eq!(RootSystem::D(3).dimension(&[1, 1, 1]), 10u32.into());
        assert_eq!(RootSystem::B(3).dimension(&[0, 0, 0]), 1u32.into());
    }

    #[test]
    fn vector_character_of_b2() {
        let chi = RootSystem::B(2).character(&[1, 0]).unwrap();
        assert_eq!(chi.len(), 5);
        assert_eq!(chi.evaluate_at_one(), BigInt::from(5));
        for (e, c) in chi.terms() {
            assert_eq!(c, &BigInt::one());
            assert_eq!(e.iter().map(|x| x.abs()).sum::<i64>() % 2, 0);
        }
    }

    #[test]
    fn dominance() {
        assert!(RootSystem::D(2).is_dominant(&[3, -2]));
        assert!(!RootSystem::B(2).is_dominant(&[3, -2]));
        assert!(!RootSystem::D(3).is_dominant(&[1, -2, 0]));
        assert!(RootSystem::C(1).is_dominant(&[4]));
    }
}
