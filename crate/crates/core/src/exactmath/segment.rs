//! Laurent polynomials whose Newton polytope is a line segment.
//!
//! Such a polynomial can be written `x^u * g((x^w)^e)` with `w` primitive and
//! `g(0) != 0`. Exchange polynomials of generalized seeds always have this form.

use num_integer::Integer;

use super::laurent::{int_gcd, Exponents, LaurentPoly};
use super::unipoly::UniPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentForm {
    pub unit_monomial: Exponents,
    /// Primitive direction, lexicographically positive (first nonzero entry > 0).
    pub direction: Exponents,
    pub stretch: usize,
    /// Profile `g` with nonzero constant term.
    pub profile: UniPoly,
}

impl SegmentForm {
    /// `G(y) = g(y^e)`, so that the source equals `x^u * G(x^w)`.
    pub fn inflated_profile(&self) -> UniPoly {
        self.profile.inflate(self.stretch)
    }

    pub fn reconstruct(&self) -> LaurentPoly {
        let arity = self.unit_monomial.len();
        let step = LaurentPoly::monomial(
            arity,
            self.direction.clone(),
            num_rational::BigRational::from_integer(1.into()),
        );
        self.inflated_profile()
            .compose_laurent(&step)
            .shift(&self.unit_monomial)
    }

    /// Number of terms minus one is at most the profile degree; a monomial has degree 0.
    pub fn is_monomial(&self) -> bool {
        self.profile.is_constant()
    }
}

/// Writes `f` in segment form, or `None` when the Newton polytope is not collinear.
///
/// Panics on the zero polynomial.
pub fn segment_decompose(f: &LaurentPoly) -> Option<SegmentForm> {
    assert!(!f.is_zero(), "segment_decompose of zero");
    let arity = f.arity();
    let mut terms = f.terms();
    let (base, c0) = terms.next().unwrap();
    let base = base.clone();
    let c0 = c0.clone();
    if f.is_monomial() {
        let mut w = vec![0; arity];
        if arity > 0 {
            w[0] = 1;
        }
        return Some(SegmentForm {
            unit_monomial: base,
            direction: w,
            stretch: 1,
            profile: UniPoly::constant(c0),
        });
    }
    // Terms iterate in ascending lex order, so every difference from the first
    // exponent is lexicographically positive.
    let (second, _) = f.terms().nth(1).unwrap();
    let d: Vec<i64> = second.iter().zip(&base).map(|(a, b)| a - b).collect();
    let g = int_gcd(d.iter().copied());
    let w: Vec<i64> = d.iter().map(|x| x / g).collect();
    let pivot = w.iter().position(|&x| x != 0).unwrap();

    let mut steps: Vec<(i64, num_rational::BigRational)> = vec![(0, c0)];
    for (e, c) in f.terms().skip(1) {
        let diff: Vec<i64> = e.iter().zip(&base).map(|(a, b)| a - b).collect();
        let t = diff[pivot] / w[pivot];
        if t <= 0 || diff.iter().zip(&w).any(|(x, y)| *x != t * y) {
            return None;
        }
        steps.push((t, c.clone()));
    }
    let stretch = steps.iter().fold(0i64, |acc, (t, _)| acc.gcd(t));
    let deg = (steps.iter().map(|(t, _)| *t).max().unwrap() / stretch) as usize;
    let mut coeffs = vec![num_rational::BigRational::from_integer(0.into()); deg + 1];
    for (t, c) in steps {
        coeffs[(t / stretch) as usize] = c;
    }
    Some(SegmentForm {
        unit_monomial: base,
        direction: w,
        stretch: stretch as usize,
        profile: UniPoly::new(coeffs),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{default_names, parse_poly};

    fn p(s: &str, n: usize) -> LaurentPoly {
        parse_poly(s, &default_names(n)).unwrap()
    }

    #[test]
    fn binomial_square() {
        let s = segment_decompose(&p("x1^2 + 2*x1 + 1", 2)).unwrap();
        assert_eq!(s.unit_monomial, vec![0, 0]);
        assert_eq!(s.direction, vec![1, 0]);
        assert_eq!(s.stretch, 1);
        assert_eq!(s.profile, UniPoly::from_ints(&[1, 2, 1]));
    }

    #[test]
    fn single_monomial_is_degenerate_segment() {
        let s = segment_decompose(&p("x1*x2", 2)).unwrap();
        assert_eq!(s.unit_monomial, vec![1, 1]);
        assert_eq!(s.stretch, 1);
        assert_eq!(s.profile, UniPoly::one());
        assert!(s.is_monomial());
    }

    #[test]
    fn stretched_segment() {
        let f = p("x1*x2 + x1^3*x2^3 + x1^5*x2^5", 2);
        let s = segment_decompose(&f).unwrap();
        assert_eq!(s.unit_monomial, vec![1, 1]);
        assert_eq!(s.direction, vec![1, 1]);
        assert_eq!(s.stretch, 2);
        assert_eq!(s.profile, UniPoly::from_ints(&[1, 1, 1]));
        assert_eq!(s.reconstruct(), f);
    }

    #[test]
    fn non_collinear() {
        assert_eq!(segment_decompose(&p("x1 + x2 + 1", 2)), None);
        assert_eq!(segment_decompose(&p("x1 + x1^3 + x2", 2)), None);
    }

    #[test]
    fn negative_direction_components() {
        let f = p("x2^2 + x3^2", 3);
        let s = segment_decompose(&f).unwrap();
        assert_eq!(s.direction, vec![0, 1, -1]);
        assert_eq!(s.stretch, 2);
        assert_eq!(s.reconstruct(), f);
    }
}
