//! Exact arithmetic in binary extension fields GF(2^m).
//!
//! Elements are plain bitmasks: bit i of an element is the coefficient of x^i
//! in its polynomial representation over GF(2), reduced modulo an irreducible
//! degree-m polynomial. Degrees 2 through 16 are supported, which covers code
//! lengths n = 2^m − 1 up to 65535 — anything larger is outside desk scale.
//!
//! Addition is XOR, multiplication is carry-less shift-and-add followed by
//! reduction, and exponentiation is square-and-multiply. All operations are
//! pure functions of immutable inputs and safe to call concurrently.

use thiserror::Error;

/// A field element: bitmask with all bits at positions ≥ m clear.
pub type Element = u64;

/// Lexicographically least irreducible polynomial of each degree m = 2..=16,
/// encoded as a bitmask with bit i = coefficient of x^i. Pinning these makes
/// code constructions reproducible across runs and implementations.
const DEFAULT_MODULI: [u64; 15] = [
    0x7,     // m=2:  x^2 + x + 1
    0xB,     // m=3:  x^3 + x + 1
    0x13,    // m=4:  x^4 + x + 1
    0x25,    // m=5:  x^5 + x^2 + 1
    0x43,    // m=6:  x^6 + x + 1
    0x83,    // m=7:  x^7 + x + 1
    0x11B,   // m=8:  x^8 + x^4 + x^3 + x + 1
    0x203,   // m=9:  x^9 + x + 1
    0x409,   // m=10: x^10 + x^3 + 1
    0x805,   // m=11: x^11 + x^2 + 1
    0x1009,  // m=12: x^12 + x^3 + 1
    0x201B,  // m=13: x^13 + x^4 + x^3 + x + 1
    0x4021,  // m=14: x^14 + x^5 + 1
    0x8003,  // m=15: x^15 + x + 1
    0x1002B, // m=16: x^16 + x^5 + x^3 + x + 1
];

pub const MIN_DEGREE: u32 = 2;
pub const MAX_DEGREE: u32 = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("field degree {0} outside supported range {MIN_DEGREE}..={MAX_DEGREE}")]
    DegreeOutOfRange(u32),
    #[error("modulus {modulus:#x} is not a degree-{degree} polynomial")]
    ModulusDegreeMismatch { degree: u32, modulus: u64 },
    #[error("modulus {modulus:#x} is reducible over GF(2); not a valid field")]
    ReducibleModulus { modulus: u64 },
}

/// A binary extension field GF(2^m) fixed by its modulus polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldSpec {
    degree: u32,
    modulus: u64,
}

impl FieldSpec {
    /// Field with the default (lexicographically least irreducible) modulus.
    pub fn new(degree: u32) -> Result<Self, FieldError> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&degree) {
            return Err(FieldError::DegreeOutOfRange(degree));
        }
        Ok(FieldSpec {
            degree,
            modulus: DEFAULT_MODULI[(degree - MIN_DEGREE) as usize],
        })
    }

    /// Field with a caller-supplied modulus, validated for degree and
    /// irreducibility.
    pub fn with_modulus(degree: u32, modulus: u64) -> Result<Self, FieldError> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&degree) {
            return Err(FieldError::DegreeOutOfRange(degree));
        }
        if poly_degree(modulus) != Some(degree) {
            return Err(FieldError::ModulusDegreeMismatch { degree, modulus });
        }
        if !is_irreducible(modulus) {
            return Err(FieldError::ReducibleModulus { modulus });
        }
        Ok(FieldSpec { degree, modulus })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Number of elements, 2^m.
    pub fn order(&self) -> u64 {
        1 << self.degree
    }

    /// Order of the multiplicative group, 2^m − 1.
    pub fn group_order(&self) -> u64 {
        (1 << self.degree) - 1
    }

    /// True if `a` is a valid element mask (no bits at or above position m).
    pub fn contains(&self, a: Element) -> bool {
        a < self.order()
    }
}

/// Degree of a nonzero polynomial bitmask; None for the zero polynomial.
fn poly_degree(p: u64) -> Option<u32> {
    if p == 0 {
        None
    } else {
        Some(63 - p.leading_zeros())
    }
}

/// Remainder of polynomial division over GF(2).
fn poly_rem(mut a: u64, b: u64) -> u64 {
    let db = poly_degree(b).expect("division by zero polynomial");
    while let Some(da) = poly_degree(a) {
        if da < db {
            break;
        }
        a ^= b << (da - db);
    }
    a
}

/// Irreducibility over GF(2) by trial division: a degree-m polynomial is
/// irreducible iff it has no factor of degree 1..=m/2.
pub fn is_irreducible(p: u64) -> bool {
    let m = match poly_degree(p) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if m == 1 {
        return true;
    }
    if p & 1 == 0 {
        return false; // divisible by x
    }
    for d in 1..=(m / 2) {
        for g in (1u64 << d)..(1u64 << (d + 1)) {
            if poly_rem(p, g) == 0 {
                return false;
            }
        }
    }
    true
}

/// Field addition: coefficient-wise XOR. Subtraction is the same operation.
#[inline]
pub fn ff_add(a: Element, b: Element) -> Element {
    a ^ b
}

/// Field multiplication: carry-less shift-and-add with interleaved reduction
/// by the modulus, so intermediates never exceed m+1 bits.
pub fn ff_mul(a: Element, b: Element, spec: &FieldSpec) -> Element {
    debug_assert!(spec.contains(a) && spec.contains(b));
    let m = spec.degree;
    let q = spec.modulus;
    let mut acc = 0u64;
    let mut a = a;
    for i in 0..m {
        if (b >> i) & 1 == 1 {
            acc ^= a;
        }
        a <<= 1;
        if (a >> m) & 1 == 1 {
            a ^= q;
        }
    }
    acc
}

/// Field exponentiation by square-and-multiply. `a^0 = 1` for every `a`,
/// including the 0^0 = 1 convention (callers that need f(0) = 0 handle the
/// zero input themselves).
pub fn ff_pow(a: Element, e: u64, spec: &FieldSpec) -> Element {
    let mut result: Element = 1;
    let mut base = a;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = ff_mul(result, base, spec);
        }
        base = ff_mul(base, base, spec);
        e >>= 1;
    }
    result
}

/// Prime factors of `n`, each listed once, by trial division.
fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut factors = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            factors.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        factors.push(n);
    }
    factors
}

/// Smallest-bitmask element of multiplicative order 2^m − 1.
///
/// Deterministic: scans element masks upward, accepting the first `g` with
/// `g^(2^m−1) = 1` and `g^((2^m−1)/ℓ) ≠ 1` for every prime ℓ dividing the
/// group order. Always succeeds for an irreducible modulus (FieldSpec
/// construction guarantees irreducibility).
pub fn find_primitive(spec: &FieldSpec) -> Element {
    let order = spec.group_order();
    let factors = prime_factors(order);
    for g in 2..spec.order() {
        if ff_pow(g, order, spec) != 1 {
            continue;
        }
        if factors.iter().all(|&f| ff_pow(g, order / f, spec) != 1) {
            return g;
        }
    }
    unreachable!("irreducible modulus guarantees a cyclic group with a generator");
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(m: u32) -> FieldSpec {
        FieldSpec::new(m).unwrap()
    }

    #[test]
    fn default_moduli_are_least_irreducible() {
        for m in MIN_DEGREE..=MAX_DEGREE {
            let spec = gf(m);
            assert_eq!(poly_degree(spec.modulus()), Some(m));
            assert!(is_irreducible(spec.modulus()), "m={m}");
            // Nothing smaller of the same degree is irreducible.
            for cand in (1u64 << m)..spec.modulus() {
                assert!(!is_irreducible(cand), "m={m} cand={cand:#x}");
            }
        }
    }

    #[test]
    fn add_is_xor() {
        assert_eq!(ff_add(0b101, 0b011), 0b110);
        assert_eq!(ff_add(0b010, 0b010), 0); // characteristic 2
        assert_eq!(ff_add(0, 0b11), 0b11);
    }

    #[test]
    fn mul_gf8_examples() {
        let spec = gf(3); // x^3 + x + 1
        // x · x^2 = x^3 ≡ x + 1
        assert_eq!(ff_mul(0b010, 0b100, &spec), 0b011);
        for e in 0..8 {
            assert_eq!(ff_mul(1, e, &spec), e);
            assert_eq!(ff_mul(0, e, &spec), 0);
        }
    }

    #[test]
    fn mul_against_schoolbook_reduce() {
        // Independent route: widening carry-less product, then long division.
        fn clmul(a: u64, b: u64) -> u64 {
            let mut r = 0;
            for i in 0..32 {
                if (b >> i) & 1 == 1 {
                    r ^= a << i;
                }
            }
            r
        }
        for m in [2u32, 3, 4, 5, 6] {
            let spec = gf(m);
            let size = 1u64 << m;
            for a in 0..size {
                for b in 0..size {
                    let expect = poly_rem(clmul(a, b), spec.modulus());
                    assert_eq!(ff_mul(a, b, &spec), expect, "m={m} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn mul_commutes_and_distributes() {
        let spec = gf(5);
        for a in 0..32 {
            for b in 0..32 {
                assert_eq!(ff_mul(a, b, &spec), ff_mul(b, a, &spec));
                for c in [3u64, 17, 29] {
                    assert_eq!(
                        ff_mul(a, ff_add(b, c), &spec),
                        ff_add(ff_mul(a, b, &spec), ff_mul(a, c, &spec))
                    );
                }
            }
        }
    }

    #[test]
    fn pow_basics() {
        let spec = gf(3);
        assert_eq!(ff_pow(0b010, 7, &spec), 1); // group order 7
        // agreement with repeated multiplication
        let mut acc = 1;
        for e in 0..=14 {
            assert_eq!(ff_pow(0b010, e, &spec), acc);
            acc = ff_mul(acc, 0b010, &spec);
        }
        assert_eq!(ff_pow(5, 1, &spec), 5);
        assert_eq!(ff_pow(1, 1_000_000_000, &spec), 1);
        assert_eq!(ff_pow(0, 0, &spec), 1); // documented 0^0 = 1
        assert_eq!(ff_pow(0, 3, &spec), 0);
    }

    #[test]
    fn lagrange_exhaustive_small_degrees() {
        for m in MIN_DEGREE..=8 {
            let spec = gf(m);
            let order = spec.group_order();
            for a in 1..spec.order() {
                assert_eq!(ff_pow(a, order, &spec), 1, "m={m} a={a}");
            }
        }
    }

    #[test]
    fn frobenius_is_additive() {
        for m in MIN_DEGREE..=6 {
            let spec = gf(m);
            for a in 0..spec.order() {
                for b in 0..spec.order() {
                    let lhs = ff_mul(ff_add(a, b), ff_add(a, b), &spec);
                    let rhs = ff_add(ff_mul(a, a, &spec), ff_mul(b, b, &spec));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn primitive_elements() {
        // x generates GF(8)* and GF(4)*
        assert_eq!(find_primitive(&gf(3)), 0b010);
        assert_eq!(find_primitive(&gf(2)), 0b010);
        // x^5 + x^2 + 1: returned g has exact order 31
        let spec = FieldSpec::with_modulus(5, 0x25).unwrap();
        let g = find_primitive(&spec);
        assert_eq!(ff_pow(g, 31, &spec), 1);
        let mut seen = std::collections::HashSet::new();
        let mut acc = 1u64;
        for _ in 0..31 {
            seen.insert(acc);
            acc = ff_mul(acc, g, &spec);
        }
        assert_eq!(seen.len(), 31);
    }

    #[test]
    fn primitive_order_exact_all_degrees() {
        for m in MIN_DEGREE..=12 {
            let spec = gf(m);
            let g = find_primitive(&spec);
            let order = spec.group_order();
            assert_eq!(ff_pow(g, order, &spec), 1, "m={m}");
            for f in prime_factors(order) {
                assert_ne!(ff_pow(g, order / f, &spec), 1, "m={m} f={f}");
            }
        }
    }

    #[test]
    fn spec_validation() {
        assert_eq!(FieldSpec::new(1), Err(FieldError::DegreeOutOfRange(1)));
        assert_eq!(FieldSpec::new(17), Err(FieldError::DegreeOutOfRange(17)));
        // x^4 + 1 = (x+1)^4 is reducible
        assert_eq!(
            FieldSpec::with_modulus(4, 0x11),
            Err(FieldError::ReducibleModulus { modulus: 0x11 })
        );
        // degree mismatch
        assert!(matches!(
            FieldSpec::with_modulus(4, 0xB),
            Err(FieldError::ModulusDegreeMismatch { .. })
        ));
        // the AES polynomial is a valid non-default modulus for m=8
        assert!(FieldSpec::with_modulus(8, 0x11B).is_ok());
    }
}
