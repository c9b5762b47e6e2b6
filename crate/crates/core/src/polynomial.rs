//! Dense univariate polynomials with exact rational coefficients.
//!
//! Coefficients are stored in ascending order of degree and kept in
//! canonical form (no trailing zeros), so derived equality is mathematical
//! equality. The zero polynomial is the empty coefficient vector.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision integer.
pub type Integer = BigInt;

/// Arbitrary-precision fraction, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = Polynomial { coeffs };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// Integer coefficients in ascending order: `from_i64s(&[1, 0, 0, 1])` is `x^3 + 1`.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// The binomial-basis polynomial `C(x, i) = x (x - 1) ... (x - i + 1) / i!`.
    pub fn binomial(i: usize) -> Self {
        let mut p = Self::one();
        for j in 0..i {
            let factor = Self::new(vec![
                Rational::from_integer(-BigInt::from(j)),
                Rational::one(),
            ]);
            p = &p * &factor;
            p = p.scale(&Rational::new(BigInt::one(), BigInt::from(j + 1)));
        }
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact value at an integer point.
    ///
    /// Horner's scheme over the integer numerators after scaling by the
    /// common denominator, so the fraction is reduced once at the end.
    pub fn evaluate(&self, n: &Integer) -> Rational {
        let common = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| if c.denom().is_one() { l } else { l.lcm(c.denom()) });
        let numer = self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| {
            acc * n + c.numer() * (&common / c.denom())
        });
        Rational::new(numer, common)
    }

    /// Shorthand for [`Polynomial::evaluate`] at a machine-sized point.
    pub fn eval_at(&self, n: i64) -> Rational {
        self.evaluate(&BigInt::from(n))
    }

    /// Value at an integer point when that value is itself an integer.
    pub fn eval_integer(&self, n: &Integer) -> Option<Integer> {
        let v = self.evaluate(n);
        v.is_integer().then(|| v.to_integer())
    }

    /// `G(x) = F(x + k)`, by Horner's scheme over polynomials (Taylor shift).
    pub fn shift_argument(&self, k: &Integer) -> Self {
        let x_plus_k = Self::new(vec![Rational::from_integer(k.clone()), Rational::one()]);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * &x_plus_k) + &Self::constant(c.clone())
        })
    }

    /// Forward difference `∂F(x) = F(x + 1) - F(x)`.
    pub fn difference(&self) -> Self {
        &self.shift_argument(&BigInt::one()) - self
    }

    /// `∂ⁱF`; `∂⁰F = F`.
    pub fn iterated_difference(&self, i: usize) -> Self {
        let mut p = self.clone();
        for _ in 0..i {
            if p.is_zero() {
                break;
            }
            p = p.difference();
        }
        p
    }

    /// `∂ⁱF(n)` from point values alone:
    /// `Σ_{j=0}^{i} C(i, j) (-1)^(i-j) F(n + j)`.
    ///
    /// Never builds `∂ⁱF`, so it serves as a cross-check on
    /// [`Polynomial::iterated_difference`].
    pub fn iterated_difference_direct(&self, i: usize, n: &Integer) -> Rational {
        let mut sum = Rational::zero();
        let mut binom = BigInt::one();
        for j in 0..=i {
            let term = Rational::from_integer(binom.clone()) * self.evaluate(&(n + j));
            if (i - j).is_even() {
                sum += term;
            } else {
                sum -= term;
            }
            // C(i, j + 1) = C(i, j) * (i - j) / (j + 1)
            binom = binom * BigInt::from(i - j) / BigInt::from(j + 1);
        }
        sum
    }

    /// Least `n` in `[0, degree]` with `F(n)` not an integer, if any.
    ///
    /// Integer values on `[0, d]` force integer values on every integer,
    /// so `None` means the polynomial is integer-valued. The zero
    /// polynomial is integer-valued.
    pub fn non_integer_witness(&self) -> Option<u64> {
        let d = self.degree()? as u64;
        (0..=d).find(|&n| !self.evaluate(&BigInt::from(n)).is_integer())
    }

    pub fn is_integer_valued(&self) -> bool {
        self.non_integer_witness().is_none()
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Prints in the syntax accepted by [`crate::parse::parse_polynomial`],
/// highest degree first: `x^2 - 4*x + 6`, `1/2*x^2 + 1/2*x + 1`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !magnitude.is_one() {
                        write!(f, "{magnitude}*")?;
                    }
                    f.write_str("x")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
