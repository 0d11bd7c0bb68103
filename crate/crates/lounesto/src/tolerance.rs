/// Default relative tolerance τ.
pub const DEFAULT_TOL: f64 = 1e-10;

/// `|x| < τ·max(1, scale)`.
#[inline]
pub fn is_negligible(x: f64, scale: f64, tol: f64) -> bool {
    x.abs() < tol * scale.max(1.0)
}

/// `|a − b| < τ·max(1, |a|, |b|)`.
#[inline]
pub fn approx_eq(a: f64, b: f64, tol: f64) -> bool {
    is_negligible(a - b, a.abs().max(b.abs()), tol)
}
