//! Least-squares polynomial fitting for runtime scaling studies.
//!
//! The Vandermonde system is solved by Householder QR rather than the normal
//! equations, which square the condition number.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Denominator used when turning the residual sum of squares into an RMSE.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RmseNormalization {
    /// `sqrt(SSE / (n - (degree + 1)))`
    ResidualDof,
    /// `sqrt(SSE / n)`
    SampleCount,
}

impl fmt::Display for RmseNormalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RmseNormalization::ResidualDof => "n-(degree+1)",
            RmseNormalization::SampleCount => "n",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PolyFit<T> {
    /// Coefficients in ascending powers: `c[0] + c[1] x + ...`.
    pub coefficients: Vec<T>,
    pub sse: T,
    pub rmse: T,
    pub normalization: RmseNormalization,
    pub n: usize,
}

impl<T: Real> PolyFit<T> {
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn eval(&self, x: T) -> T {
        self.coefficients
            .iter()
            .rev()
            .fold(T::zero(), |acc, &c| acc * x + c)
    }

    /// RMSE under an explicit normalization. `ResidualDof` with no residual
    /// degrees of freedom yields NaN.
    pub fn rmse_with(&self, normalization: RmseNormalization) -> T {
        let denom = match normalization {
            RmseNormalization::SampleCount => self.n,
            RmseNormalization::ResidualDof => self.n.saturating_sub(self.coefficients.len()),
        };
        if denom == 0 {
            return T::nan();
        }
        (self.sse / T::from_count(denom)).sqrt()
    }
}

/// Fits a polynomial of the given degree to `(xs, ys)`.
///
/// The reported `rmse` uses [`RmseNormalization::ResidualDof`] when there are
/// more points than coefficients, otherwise [`RmseNormalization::SampleCount`].
pub fn polyfit<T: Real>(xs: &[T], ys: &[T], degree: usize) -> Result<PolyFit<T>> {
    if xs.len() != ys.len() {
        return Err(Error::LengthMismatch {
            ticks: xs.len(),
            values: ys.len(),
        });
    }
    let cols = degree + 1;
    let rows = xs.len();
    if rows < cols {
        return Err(Error::InsufficientPoints {
            needed: cols,
            got: rows,
        });
    }
    let mut distinct = xs.to_vec();
    distinct.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    distinct.dedup();
    if distinct.len() < cols {
        return Err(Error::RankDeficient);
    }

    // Column-major Vandermonde matrix.
    let mut a: Vec<Vec<T>> = (0..cols)
        .map(|p| xs.iter().map(|&x| x.powi(p as i32)).collect())
        .collect();
    let mut b = ys.to_vec();

    let mut scale = T::zero();
    for col in &a {
        scale = scale.max(norm(col));
    }
    let tol = T::epsilon() * T::from_count(rows * cols) * scale;

    for k in 0..cols {
        let alpha = norm(&a[k][k..]);
        if alpha <= tol {
            return Err(Error::RankDeficient);
        }
        let alpha = if a[k][k] > T::zero() { -alpha } else { alpha };
        let mut v: Vec<T> = a[k][k..].to_vec();
        v[0] = v[0] - alpha;
        let vnorm2: T = v.iter().map(|&e| e * e).sum();
        if vnorm2 > T::zero() {
            for col in a.iter_mut().skip(k) {
                reflect(&v, vnorm2, &mut col[k..]);
            }
            reflect(&v, vnorm2, &mut b[k..]);
        }
    }

    // Back substitution on the upper triangle.
    let mut coefficients = vec![T::zero(); cols];
    for i in (0..cols).rev() {
        let mut acc = b[i];
        for j in i + 1..cols {
            acc = acc - a[j][i] * coefficients[j];
        }
        coefficients[i] = acc / a[i][i];
    }

    let mut fit = PolyFit {
        coefficients,
        sse: T::zero(),
        rmse: T::zero(),
        normalization: if rows > cols {
            RmseNormalization::ResidualDof
        } else {
            RmseNormalization::SampleCount
        },
        n: rows,
    };
    fit.sse = xs
        .iter()
        .zip(ys)
        .map(|(&x, &y)| {
            let r = y - fit.eval(x);
            r * r
        })
        .sum();
    fit.rmse = fit.rmse_with(fit.normalization);
    Ok(fit)
}

fn norm<T: Real>(v: &[T]) -> T {
    v.iter().map(|&e| e * e).sum::<T>().sqrt()
}

fn reflect<T: Real>(v: &[T], vnorm2: T, target: &mut [T]) {
    let dot: T = v.iter().zip(target.iter()).map(|(&a, &b)| a * b).sum();
    let f = (dot + dot) / vnorm2;
    for (t, &vi) in target.iter_mut().zip(v) {
        *t = *t - f * vi;
    }
}
