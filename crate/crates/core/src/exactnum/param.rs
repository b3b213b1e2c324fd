//! Polynomials in the free scalar parameters (α, μ_i, κ_ij, κ*_ij, ε).

use std::fmt;
use std::str::FromStr;

use super::poly::{Monomial, Poly};
use super::rational::Rational;
use super::ring::Ring;
use crate::error::Error;

/// A formal scalar parameter. The ordering of variants fixes the variable
/// order used for canonical printing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    Alpha,
    /// Satisfies ε² = 1; exponents are reduced mod 2.
    Epsilon,
    Mu(u8),
    Kappa(u8, u8),
    KappaStar(u8, u8),
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Alpha => write!(f, "alpha"),
            Param::Epsilon => write!(f, "eps"),
            Param::Mu(i) => write!(f, "mu_{i}"),
            Param::Kappa(i, j) => write!(f, "kappa_{i}_{j}"),
            Param::KappaStar(i, j) => write!(f, "kappastar_{i}_{j}"),
        }
    }
}

impl FromStr for Param {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("unknown parameter `{s}`"));
        let idx = |t: &str| t.parse::<u8>().map_err(|_| bad());
        match s {
            "alpha" => return Ok(Param::Alpha),
            "eps" => return Ok(Param::Epsilon),
            _ => {}
        }
        let parts: Vec<&str> = s.split('_').collect();
        match parts.as_slice() {
            ["mu", i] => Ok(Param::Mu(idx(i)?)),
            ["kappa", i, j] => Ok(Param::Kappa(idx(i)?, idx(j)?)),
            ["kappastar", i, j] => Ok(Param::KappaStar(idx(i)?, idx(j)?)),
            _ => Err(bad()),
        }
    }
}

/// Monomial in the parameters: sorted `(param, exponent)` pairs, exponents ≥ 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ParamMono(Vec<(Param, u32)>);

/// Graded lex: total degree first, then the exponent of the earliest
/// parameter where the two differ. Multiplicative, so leading terms behave
/// under products.
impl Ord for ParamMono {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        self.degree().cmp(&o.degree()).then_with(|| {
            let (mut i, mut j) = (0, 0);
            while i < self.0.len() && j < o.0.len() {
                let ((pa, ea), (pb, eb)) = (self.0[i], o.0[j]);
                match pa.cmp(&pb) {
                    std::cmp::Ordering::Less => return std::cmp::Ordering::Greater,
                    std::cmp::Ordering::Greater => return std::cmp::Ordering::Less,
                    std::cmp::Ordering::Equal if ea != eb => return ea.cmp(&eb),
                    std::cmp::Ordering::Equal => {
                        i += 1;
                        j += 1;
                    }
                }
            }
            (self.0.len() - i).cmp(&(o.0.len() - j))
        })
    }
}

impl PartialOrd for ParamMono {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

impl ParamMono {
    pub fn var(p: Param) -> Self {
        ParamMono(vec![(p, 1)])
    }

    pub fn factors(&self) -> &[(Param, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    fn reduce(mut v: Vec<(Param, u32)>) -> Self {
        for (p, e) in v.iter_mut() {
            if *p == Param::Epsilon {
                *e %= 2;
            }
        }
        v.retain(|(_, e)| *e > 0);
        ParamMono(v)
    }
}

impl Monomial for ParamMono {
    fn one() -> Self {
        ParamMono(Vec::new())
    }
    fn is_one(&self) -> bool {
        self.0.is_empty()
    }
    fn mul(&self, o: &Self) -> Self {
        if o.0.is_empty() {
            return self.clone();
        }
        if self.0.is_empty() {
            return o.clone();
        }
        let mut out = Vec::with_capacity(self.0.len() + o.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < o.0.len() {
            let (pa, ea) = self.0[i];
            let (pb, eb) = o.0[j];
            match pa.cmp(&pb) {
                std::cmp::Ordering::Less => {
                    out.push((pa, ea));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((pb, eb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((pa, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&o.0[j..]);
        Self::reduce(out)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        let mut out = self.0.clone();
        for (p, e) in &o.0 {
            match out.iter_mut().find(|(q, _)| q == p) {
                Some((_, f)) if *f >= *e => *f -= e,
                _ => return None,
            }
        }
        Some(Self::reduce(out))
    }
    fn gcd(&self, o: &Self) -> Self {
        ParamMono(
            self.0
                .iter()
                .filter_map(|(p, e)| o.0.iter().find(|(q, _)| q == p).map(|(_, f)| (*p, (*e).min(*f))))
                .collect(),
        )
    }
    fn is_poly_multiple_of(&self, o: &Self) -> bool {
        self.div(o).is_some()
    }
    fn fmt_mono(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (p, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Polynomial over ℚ in the formal parameters.
pub type ParamPoly = Poly<ParamMono, Rational>;

impl ParamPoly {
    pub fn param(p: Param) -> Self {
        Poly::monomial(ParamMono::var(p))
    }

    pub fn rational(r: Rational) -> Self {
        Poly::constant(r)
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(Rational::from_int(n))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Poly::constant(Rational::new(n, d))
    }

    /// `(-1)^k`.
    pub fn sign(k: i64) -> Self {
        Poly::constant(Rational::sign_pow(k))
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// Total degree (0 for the zero polynomial).
    pub fn total_degree(&self) -> u32 {
        self.terms().iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// True when every term has total degree exactly `d`.
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms().iter().all(|(m, _)| m.degree() == d)
    }

    /// Parses the canonical printing format, e.g. `-2*alpha + 3/4`,
    /// `(1/2)*mu_1*kappa_1_2^2`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let mut rest = s;
        let mut sign = 1i64;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        }
        loop {
            // Find the next top-level " + " / " - " separator.
            let (term, next) = match find_separator(rest) {
                Some((pos, next_sign)) => (&rest[..pos], Some((next_sign, &rest[pos + 3..]))),
                None => (rest, None),
            };
            terms.push(parse_term(term.trim(), sign)?);
            match next {
                Some((sg, r)) => {
                    sign = sg;
                    rest = r;
                }
                None => break,
            }
        }
        Ok(Poly::from_terms(terms))
    }
}

fn find_separator(s: &str) -> Option<(usize, i64)> {
    let bytes = s.as_bytes();
    let mut depth = 0i32;
    for i in 0..bytes.len() {
        match bytes[i] {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b' ' if depth == 0 && i + 2 < bytes.len() && bytes[i + 2] == b' ' => match bytes[i + 1] {
                b'+' => return Some((i, 1)),
                b'-' => return Some((i, -1)),
                _ => {}
            },
            _ => {}
        }
    }
    None
}

fn parse_term(t: &str, sign: i64) -> Result<(ParamMono, Rational), Error> {
    let bad = || Error::Parse(format!("invalid term `{t}`"));
    let mut coeff = Rational::from_int(sign);
    let mut mono = ParamMono::one();
    let mut rest = t;
    if let Some(r) = rest.strip_prefix('(') {
        let close = r.find(')').ok_or_else(bad)?;
        coeff = coeff.times(&r[..close].parse::<Rational>()?);
        rest = &r[close + 1..];
        rest = rest.strip_prefix('*').unwrap_or(rest);
        if rest.is_empty() {
            return Ok((mono, coeff));
        }
    }
    for (k, factor) in rest.split('*').enumerate() {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(bad());
        }
        if k == 0 && factor.as_bytes()[0].is_ascii_digit() {
            coeff = coeff.times(&factor.parse::<Rational>()?);
            continue;
        }
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => (n, e.parse::<u32>().map_err(|_| bad())?),
            None => (factor, 1),
        };
        let p: Param = name.parse()?;
        let mut m = ParamMono::one();
        for _ in 0..exp {
            m = m.mul(&ParamMono::var(p));
        }
        mono = mono.mul(&m);
    }
    Ok((mono, coeff))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> ParamPoly {
        ParamPoly::param(Param::Alpha)
    }

    #[test]
    fn epsilon_squares_to_one() {
        let e = ParamPoly::param(Param::Epsilon);
        assert_eq!(e.times(&e), ParamPoly::one());
        assert_eq!(e.times(&e).times(&e), e);
    }

    #[test]
    fn printing_is_canonical() {
        let p = a().times(&ParamPoly::int(-2)).plus(&ParamPoly::frac(3, 4));
        assert_eq!(p.to_string(), "3/4 - 2*alpha");
        let q = ParamPoly::param(Param::Mu(1))
            .times(&ParamPoly::param(Param::Kappa(1, 2)))
            .times(&ParamPoly::param(Param::Kappa(1, 2)))
            .times(&ParamPoly::frac(-1, 2));
        assert_eq!(q.to_string(), "-1/2*mu_1*kappa_1_2^2");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "1", "-alpha", "3/4 - 2*alpha", "-1/2*mu_1*kappa_1_2^2 + kappastar_2_3", "eps"] {
            let p = ParamPoly::parse(s).unwrap();
            assert_eq!(ParamPoly::parse(&p.to_string()).unwrap(), p, "{s}");
        }
        assert_eq!(ParamPoly::parse("-2*alpha + 3/4").unwrap().to_string(), "3/4 - 2*alpha");
        assert!(ParamPoly::parse("beta").is_err());
    }

    #[test]
    fn exact_division() {
        let f = a().times(&a()).minus(&ParamPoly::one());
        let g = a().minus(&ParamPoly::one());
        assert_eq!(f.div_exact(&g).unwrap(), a().plus(&ParamPoly::one()));
        assert!(g.div_exact(&f).is_none());
        assert!(a().div_exact(&a().plus(&ParamPoly::one())).is_none());
    }
}
