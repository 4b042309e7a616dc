//! Univariate polynomials over 𝔽_p, characteristic polynomials and
//! factorization into irreducibles (square-free, distinct-degree and
//! Cantor–Zassenhaus equal-degree splitting).

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{prime, Fp};
use super::matrix::Matrix;

/// Coefficients from the constant term upwards, without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly(Vec<Fp>);

impl Poly {
    pub fn zero() -> Poly {
        Poly(Vec::new())
    }

    pub fn one() -> Poly {
        Poly(vec![Fp::ONE])
    }

    pub fn x() -> Poly {
        Poly(vec![Fp::ZERO, Fp::ONE])
    }

    pub fn constant(c: Fp) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    /// `x - c`
    pub fn linear(c: Fp) -> Poly {
        Poly(vec![-c, Fp::ONE])
    }

    pub fn from_coeffs(mut c: Vec<Fp>) -> Poly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly(c)
    }

    pub fn coeffs(&self) -> &[Fp] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0] == Fp::ONE
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> Fp {
        self.0.last().copied().unwrap_or(Fp::ZERO)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading().inv().unwrap();
        Poly(self.0.iter().map(|&c| c * inv).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        Poly::from_coeffs(
            (0..n)
                .map(|i| self.0.get(i).copied().unwrap_or(Fp::ZERO) + other.0.get(i).copied().unwrap_or(Fp::ZERO))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        Poly::from_coeffs(
            (0..n)
                .map(|i| self.0.get(i).copied().unwrap_or(Fp::ZERO) - other.0.get(i).copied().unwrap_or(Fp::ZERO))
                .collect(),
        )
    }

    pub fn scale(&self, s: Fp) -> Poly {
        Poly::from_coeffs(self.0.iter().map(|&c| c * s).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Fp::ZERO; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let mut r = self.0.clone();
        let dd = d.deg();
        if r.len() < d.0.len() {
            return (Poly::zero(), self.clone());
        }
        let inv = d.leading().inv().unwrap();
        let mut q = vec![Fp::ZERO; r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = r[i + dd] * inv;
            q[i] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &dc) in d.0.iter().enumerate() {
                r[i + j] -= c * dc;
            }
        }
        r.truncate(dd);
        (Poly::from_coeffs(q), Poly::from_coeffs(r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    pub fn div_exact(&self, d: &Poly) -> Poly {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero());
        q
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        Poly::from_coeffs(self.0.iter().enumerate().skip(1).map(|(i, &c)| c * Fp::new(i as i64)).collect())
    }

    pub fn eval(&self, x: Fp) -> Fp {
        self.0.iter().rev().fold(Fp::ZERO, |acc, &c| acc * x + c)
    }

    /// Evaluates at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for &c in self.0.iter().rev() {
            acc = &acc * m;
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
        acc
    }

    /// `self^e mod m`
    pub fn pow_mod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut base = self.rem(m);
        let mut acc = Poly::one().rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// Inverse of the Frobenius on polynomials whose exponents are all
    /// multiples of p.
    fn pth_root(&self) -> Poly {
        let p = prime() as usize;
        Poly::from_coeffs(self.0.iter().step_by(p).copied().collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let v = c.signed();
            let sign = if v < 0 { "-" } else { "+" };
            let mag = v.unsigned_abs();
            if first {
                if v < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let coeff = if mag == 1 && i > 0 { String::new() } else { mag.to_string() };
            match i {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{coeff}x")?,
                _ => write!(f, "{coeff}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Characteristic polynomial `det(xI − m)` via reduction to Hessenberg form.
pub fn char_poly(m: &Matrix) -> Poly {
    assert!(m.is_square(), "characteristic polynomial of a non-square matrix");
    let n = m.rows();
    let mut h = m.clone();
    for col in 1..n.saturating_sub(1) {
        let Some(piv) = (col..n).find(|&i| !h[(i, col - 1)].is_zero()) else {
            continue;
        };
        h.swap_rows(piv, col);
        h.swap_cols(piv, col);
        let inv = h[(col, col - 1)].inv().unwrap();
        for j in col + 1..n {
            let u = h[(j, col - 1)] * inv;
            if u.is_zero() {
                continue;
            }
            for c in 0..n {
                let v = h[(col, c)];
                h[(j, c)] -= u * v;
            }
            for r in 0..n {
                let v = h[(r, j)];
                h[(r, col)] += u * v;
            }
        }
    }
    let mut ps = vec![Poly::one()];
    for k in 1..=n {
        let mut pk = Poly::linear(h[(k - 1, k - 1)]).mul(&ps[k - 1]);
        let mut t = Fp::ONE;
        for i in (1..k).rev() {
            t *= h[(i, i - 1)];
            if t.is_zero() {
                break;
            }
            let c = h[(i - 1, k - 1)] * t;
            pk = pk.sub(&ps[i - 1].scale(c));
        }
        ps.push(pk);
    }
    ps.pop().unwrap()
}

/// Irreducible monic factors of the characteristic polynomial with their
/// multiplicities, sorted by degree then coefficients.
pub fn char_poly_factors(m: &Matrix) -> Vec<(Poly, usize)> {
    factor(&char_poly(m))
}

/// Factors a nonzero polynomial into monic irreducibles with multiplicity.
pub fn factor(f: &Poly) -> Vec<(Poly, usize)> {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let f = f.monic();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f00d);
    let mut out: Vec<(Poly, usize)> = Vec::new();
    for (g, mult) in square_free(&f) {
        for (h, d) in distinct_degree(&g) {
            for irr in equal_degree(&h, d, &mut rng) {
                match out.iter_mut().find(|(q, _)| *q == irr) {
                    Some(entry) => entry.1 += mult,
                    None => out.push((irr, mult)),
                }
            }
        }
    }
    // linear factors x - c come out in increasing order of c
    out.sort_by_key(|(f, _)| {
        let key: Vec<u32> = f.0.iter().rev().map(|&c| (-c).value()).collect();
        (f.deg(), key)
    });
    out
}

fn square_free(f: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let p = prime() as usize;
    let df = f.derivative();
    if df.is_zero() {
        for (g, m) in square_free(&f.pth_root()) {
            out.push((g, m * p));
        }
        return out;
    }
    let mut c = f.gcd(&df);
    let mut w = f.div_exact(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.div_exact(&y);
        if fac.deg() > 0 {
            out.push((fac.monic(), i));
        }
        w = y;
        c = c.div_exact(&w);
        i += 1;
    }
    if c.deg() > 0 {
        for (g, m) in square_free(&c.pth_root()) {
            out.push((g, m * p));
        }
    }
    out
}

fn distinct_degree(f: &Poly) -> Vec<(Poly, usize)> {
    let p = prime() as u64;
    let mut out = Vec::new();
    let mut f = f.clone();
    let mut h = Poly::x().rem(&f);
    let mut d = 1;
    while f.deg() >= 2 * d {
        h = h.pow_mod(p, &f);
        let g = h.sub(&Poly::x()).gcd(&f);
        if !g.is_one() {
            f = f.div_exact(&g);
            h = h.rem(&f);
            out.push((g, d));
        }
        d += 1;
    }
    if f.deg() > 0 {
        let deg = f.deg();
        out.push((f.monic(), deg));
    }
    out
}

fn equal_degree(f: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let n = f.deg();
    if n == d {
        return vec![f.monic()];
    }
    let p = prime() as u64;
    loop {
        let a = Poly::from_coeffs((0..n).map(|_| Fp::new(rng.gen_range(0..p) as i64)).collect());
        if a.deg() == 0 {
            continue;
        }
        let g = a.gcd(f);
        if !g.is_one() && g.deg() < n {
            return split_pair(f, &g, d, rng);
        }
        let b = if p == 2 {
            // absolute trace a + a^2 + ... + a^(2^(d-1))
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            acc
        } else {
            // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p - 1)/2)
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.pow_mod(p, f);
                acc = acc.mul(&t).rem(f);
            }
            acc.pow_mod((p - 1) / 2, f).sub(&Poly::one())
        };
        let g = b.gcd(f);
        if !g.is_one() && g.deg() > 0 && g.deg() < n {
            return split_pair(f, &g, d, rng);
        }
    }
}

fn split_pair(f: &Poly, g: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let mut out = equal_degree(g, d, rng);
    out.extend(equal_degree(&f.div_exact(g), d, rng));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reassemble(factors: &[(Poly, usize)]) -> Poly {
        factors.iter().fold(Poly::one(), |acc, (f, m)| (0..*m).fold(acc, |a, _| a.mul(f)))
    }

    #[test]
    fn zero_and_identity() {
        assert_eq!(char_poly_factors(&Matrix::zeros(2, 2)), vec![(Poly::x(), 2)]);
        assert_eq!(char_poly_factors(&Matrix::identity(2)), vec![(Poly::linear(Fp::ONE), 2)]);
    }

    #[test]
    fn diagonal_distinct() {
        let m = Matrix::diagonal(&[Fp::new(1), Fp::new(2)]);
        assert_eq!(char_poly_factors(&m), vec![(Poly::linear(Fp::new(1)), 1), (Poly::linear(Fp::new(2)), 1)]);
    }

    #[test]
    fn rotation_is_irreducible_quadratic() {
        // x^2 + 1 is irreducible when p ≡ 3 mod 4, and 32003 ≡ 3 mod 4
        let m = Matrix::from_rows(&[vec![0, -1], vec![1, 0]]);
        let f = char_poly_factors(&m);
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].0, Poly::from_coeffs(vec![Fp::ONE, Fp::ZERO, Fp::ONE]));
    }

    #[test]
    fn char_poly_of_companion() {
        // companion matrix of x^3 - 2x + 5
        let m = Matrix::from_rows(&[vec![0, 0, -5], vec![1, 0, 2], vec![0, 1, 0]]);
        let expected = Poly::from_coeffs(vec![Fp::new(5), Fp::new(-2), Fp::ZERO, Fp::ONE]);
        assert_eq!(char_poly(&m), expected);
        assert_eq!(reassemble(&char_poly_factors(&m)), expected);
    }

    #[test]
    fn div_rem_identity() {
        let a = Poly::from_coeffs(vec![Fp::new(3), Fp::new(1), Fp::new(4), Fp::new(1)]);
        let b = Poly::from_coeffs(vec![Fp::new(5), Fp::new(9)]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn display() {
        let f = Poly::from_coeffs(vec![Fp::new(-2), Fp::ZERO, Fp::ONE]);
        assert_eq!(f.to_string(), "x^2 - 2");
    }
}
