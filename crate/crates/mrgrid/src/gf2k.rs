//! Arithmetic in binary extension fields GF(2^d), 1 <= d <= 32.
//!
//! An element is a polynomial over F_2 of degree below `d`, stored as the
//! integer whose bit `i` is the coefficient of `x^i`. Addition is bitwise XOR;
//! multiplication is shift-and-reduce modulo the irreducible reduction
//! polynomial carried by [`FieldSpec`]. All operations are pure and all types
//! are immutable values, so concurrent use is unrestricted.

use std::fmt;

use rand_core::RngCore;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("RejectedPolynomial: {reason}")]
    RejectedPolynomial { reason: String },
    #[error("DivisionByZero: zero has no multiplicative inverse")]
    DivisionByZero,
    #[error("NotPowerOfTwo: subgroup size {size} is not a power of two dividing the field size")]
    NotPowerOfTwo { size: u64 },
}

impl FieldError {
    pub fn name(&self) -> &'static str {
        match self {
            FieldError::RejectedPolynomial { .. } => "RejectedPolynomial",
            FieldError::DivisionByZero => "DivisionByZero",
            FieldError::NotPowerOfTwo { .. } => "NotPowerOfTwo",
        }
    }
}

/// Smallest irreducible polynomial of each degree 1..=32 in ascending bit-mask
/// order, restricted to nonzero constant term. Frozen from the enumeration in
/// [`smallest_irreducible`]; cross-checked by a test.
const DEFAULT_POLYS: [u64; 33] = [
    0,
    0x3,
    0x7,
    0xb,
    0x13,
    0x25,
    0x43,
    0x83,
    0x11b,
    0x203,
    0x409,
    0x805,
    0x1009,
    0x201b,
    0x4021,
    0x8003,
    0x1002b,
    0x20009,
    0x40009,
    0x80027,
    0x100009,
    0x200005,
    0x400003,
    0x800021,
    0x100001b,
    0x2000009,
    0x400001b,
    0x8000027,
    0x10000003,
    0x20000005,
    0x40000003,
    0x80000009,
    0x10000008d,
];

/// An element of GF(2^d), valid only with respect to the [`FieldSpec`] it was
/// produced from.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(u64);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}

impl fmt::LowerHex for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerHex::fmt(&self.0, f)
    }
}

/// A binary extension field GF(2^d), identified by its degree and reduction
/// polynomial. Two specs are interchangeable iff they compare equal.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    degree: u32,
    poly: u64,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{}; poly=0x{:x})", self.degree, self.poly)
    }
}

/// Builds a field of degree `d`, using `poly` as the reduction polynomial or
/// the canonical default (smallest irreducible of degree `d` in ascending
/// mask order) when omitted.
pub fn make_field(degree: u32, poly: Option<u64>) -> Result<FieldSpec, FieldError> {
    FieldSpec::new(degree, poly)
}

impl FieldSpec {
    pub fn new(degree: u32, poly: Option<u64>) -> Result<Self, FieldError> {
        if degree == 0 || degree > 32 {
            return Err(FieldError::RejectedPolynomial {
                reason: format!("degree {degree} outside supported range 1..=32"),
            });
        }
        let poly = match poly {
            Some(p) => {
                if poly_degree(p) != degree as i32 {
                    return Err(FieldError::RejectedPolynomial {
                        reason: format!("0x{p:x} does not have degree exactly {degree}"),
                    });
                }
                if p & 1 == 0 {
                    return Err(FieldError::RejectedPolynomial {
                        reason: format!("0x{p:x} has zero constant term (divisible by x)"),
                    });
                }
                if !is_irreducible(p) {
                    return Err(FieldError::RejectedPolynomial {
                        reason: format!("0x{p:x} is reducible over GF(2)"),
                    });
                }
                p
            }
            None => DEFAULT_POLYS[degree as usize],
        };
        Ok(FieldSpec { degree, poly })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn poly(&self) -> u64 {
        self.poly
    }

    /// Number of field elements, 2^d.
    pub fn size(&self) -> u64 {
        1u64 << self.degree
    }

    pub fn contains(&self, x: FieldElement) -> bool {
        x.0 < self.size()
    }

    /// Wraps raw bits as an element. Panics if `bits` is out of range; inputs
    /// crossing a trust boundary go through [`crate::io`] validation instead.
    pub fn element(&self, bits: u64) -> FieldElement {
        assert!(
            bits < self.size(),
            "element 0x{bits:x} out of range for {self:?}"
        );
        FieldElement(bits)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// All field elements in ascending bit order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.size()).map(FieldElement)
    }

    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        debug_assert!(self.contains(x) && self.contains(y));
        FieldElement(x.0 ^ y.0)
    }

    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        debug_assert!(self.contains(x) && self.contains(y));
        let top = 1u64 << self.degree;
        let mut acc = 0u64;
        let mut a = x.0;
        let mut b = y.0;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & top != 0 {
                a ^= self.poly;
            }
        }
        FieldElement(acc)
    }

    pub fn square(&self, x: FieldElement) -> FieldElement {
        self.mul(x, x)
    }

    pub fn pow(&self, x: FieldElement, e: u64) -> FieldElement {
        let mut base = x;
        let mut e = e;
        let mut acc = FieldElement::ONE;
        while e != 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, x: FieldElement) -> Result<FieldElement, FieldError> {
        if x.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        // x^(2^d - 2) = x^-1 for x != 0.
        Ok(self.pow(x, self.size() - 2))
    }

    /// Uniform element, including zero.
    pub fn random_element(&self, rng: &mut impl RngCore) -> FieldElement {
        FieldElement(rng.next_u64() & (self.size() - 1))
    }

    /// Uniform nonzero element.
    pub fn random_nonzero(&self, rng: &mut impl RngCore) -> FieldElement {
        loop {
            let bits = rng.next_u64() & (self.size() - 1);
            if bits != 0 {
                return FieldElement(bits);
            }
        }
    }

    /// Splits the field additively for a power-of-two `m` with `m * n = 2^d`:
    /// the subgroup of all elements supported on the low `log2(m)` bits, and
    /// one representative per coset of it (elements supported on the high
    /// `log2(n)` bits, in ascending order).
    pub fn additive_subgroup_and_cosets(
        &self,
        m: u64,
    ) -> Result<(Vec<FieldElement>, Vec<FieldElement>), FieldError> {
        if m == 0 || !m.is_power_of_two() || m > self.size() {
            return Err(FieldError::NotPowerOfTwo { size: m });
        }
        let n = self.size() / m;
        let subgroup = (0..m).map(FieldElement).collect();
        let coset_reps = (0..n).map(|i| FieldElement(i * m)).collect();
        Ok((subgroup, coset_reps))
    }
}

fn poly_degree(p: u64) -> i32 {
    63 - p.leading_zeros() as i32
}

fn poly_rem(mut a: u64, b: u64) -> u64 {
    let db = poly_degree(b);
    while a != 0 && poly_degree(a) >= db {
        a ^= b << (poly_degree(a) - db);
    }
    a
}

/// Trial division by every polynomial of degree 1..=deg/2 with nonzero
/// constant term (divisors with zero constant term only divide multiples of
/// x, which are screened out by the caller's constant-term check).
fn is_irreducible(p: u64) -> bool {
    let d = poly_degree(p);
    if d < 1 {
        return false;
    }
    let mut q = 3u64;
    while poly_degree(q) <= d / 2 {
        if poly_rem(p, q) == 0 {
            return false;
        }
        q += 2;
    }
    true
}

/// Smallest irreducible polynomial of the given degree with nonzero constant
/// term, in ascending mask order. Source of the frozen [`DEFAULT_POLYS`].
pub fn smallest_irreducible(degree: u32) -> u64 {
    assert!((1..=32).contains(&degree));
    let mut p = (1u64 << degree) | 1;
    loop {
        if is_irreducible(p) {
            return p;
        }
        p += 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand_chacha::ChaCha8Rng;
    use rand_core::SeedableRng;

    fn gf(d: u32) -> FieldSpec {
        make_field(d, None).unwrap()
    }

    #[test]
    fn default_poly_degree_one_is_x_plus_one() {
        assert_eq!(gf(1).poly(), 0b11);
    }

    #[test]
    fn default_poly_degree_four() {
        assert_eq!(gf(4).poly(), 0b10011);
    }

    #[test]
    fn rejects_x4_plus_1() {
        // x^4 + 1 = (x+1)^4 in characteristic 2.
        let err = make_field(4, Some(0b10001)).unwrap_err();
        assert_eq!(err.name(), "RejectedPolynomial");
    }

    #[test]
    fn rejects_wrong_degree_and_bad_range() {
        assert!(make_field(4, Some(0b1001)).is_err());
        assert!(make_field(0, None).is_err());
        assert!(make_field(33, None).is_err());
        assert!(make_field(3, Some(0b1010)).is_err());
    }

    #[test]
    fn default_polys_match_enumeration() {
        for d in 1..=32 {
            assert_eq!(
                DEFAULT_POLYS[d as usize],
                smallest_irreducible(d),
                "degree {d}"
            );
        }
    }

    #[test]
    fn gf16_x_times_x3() {
        // x * x^3 = x^4 = x + 1 mod x^4 + x + 1.
        let f = gf(4);
        assert_eq!(f.mul(f.element(0x2), f.element(0x8)), f.element(0x3));
    }

    #[test]
    fn one_is_multiplicative_identity() {
        let f = gf(4);
        for a in f.elements() {
            assert_eq!(f.mul(f.one(), a), a);
        }
    }

    #[test]
    fn inverse_of_every_nonzero_element() {
        for d in [1, 2, 4, 8] {
            let f = gf(d);
            for a in f.elements().skip(1) {
                let inv = f.inv(a).unwrap();
                assert_eq!(f.mul(a, inv), f.one());
            }
        }
    }

    #[test]
    fn inv_zero_is_division_by_zero() {
        assert_eq!(gf(8).inv(FieldElement::ZERO), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn field_axioms_on_random_triples() {
        for d in [1, 4, 8, 16, 24, 32] {
            let f = gf(d);
            let mut rng = ChaCha8Rng::seed_from_u64(0xF1E1D * d as u64);
            for _ in 0..10_000 {
                let a = f.random_element(&mut rng);
                let b = f.random_element(&mut rng);
                let c = f.random_element(&mut rng);
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(
                    f.mul(a, f.add(b, c)),
                    f.add(f.mul(a, b), f.mul(a, c))
                );
                assert_eq!(f.add(a, a), f.zero());
            }
        }
    }

    #[test]
    fn squaring_is_additive() {
        let f = gf(16);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10_000 {
            let a = f.random_element(&mut rng);
            let b = f.random_element(&mut rng);
            assert_eq!(
                f.square(f.add(a, b)),
                f.add(f.square(a), f.square(b))
            );
        }
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let f = gf(8);
        let x = f.element(0x53);
        let mut acc = f.one();
        for e in 0..20 {
            assert_eq!(f.pow(x, e), acc);
            acc = f.mul(acc, x);
        }
    }

    #[test]
    fn subgroup_and_cosets_gf16() {
        let f = gf(4);
        let (sub, reps) = f.additive_subgroup_and_cosets(4).unwrap();
        assert_eq!(sub, vec![f.element(0), f.element(1), f.element(2), f.element(3)]);
        assert_eq!(
            reps,
            vec![f.element(0), f.element(4), f.element(8), f.element(0xc)]
        );
    }

    #[test]
    fn subgroup_whole_field() {
        let f = gf(2);
        let (sub, reps) = f.additive_subgroup_and_cosets(4).unwrap();
        assert_eq!(sub.len(), 4);
        assert_eq!(reps, vec![FieldElement::ZERO]);
    }

    #[test]
    fn subgroup_rejects_non_power_of_two() {
        let f = gf(4);
        assert_eq!(
            f.additive_subgroup_and_cosets(3),
            Err(FieldError::NotPowerOfTwo { size: 3 })
        );
        assert!(f.additive_subgroup_and_cosets(32).is_err());
        assert!(f.additive_subgroup_and_cosets(0).is_err());
    }

    #[test]
    fn subgroup_closure_and_coset_distinctness() {
        let f = gf(8);
        let (sub, reps) = f.additive_subgroup_and_cosets(16).unwrap();
        for &g1 in &sub {
            for &g2 in &sub {
                assert!(sub.contains(&f.add(g1, g2)));
            }
        }
        for (i, &c1) in reps.iter().enumerate() {
            for &c2 in reps.iter().skip(i + 1) {
                assert!(!sub.contains(&f.add(c1, c2)));
            }
        }
    }
}
