//! Closed-form index values for caterpillar and star arrangements.
//!
//! A leaf hanging from an internal vertex of degree `p` contributes
//! `p - 1` to irr and `(p - 1)²` to sigma. A path end carries `p - 1` such
//! leaves, an interior path vertex `p - 2`, and a star center with three
//! internal neighbours `p - 3`. The remaining terms come from the edges
//! between internal vertices.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("degree {0} is below 2")]
    DegreeBelowTwo(u32),
    #[error("degrees must satisfy a >= b >= c, got ({0},{1},{2})")]
    NotNonIncreasing(u32, u32, u32),
    #[error("star center degree {0} is below 3")]
    CenterDegreeTooSmall(u32),
    #[error("empty path order")]
    EmptyOrder,
}

/// Which of `a >= b >= c` sits in the middle of the three-vertex path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Middle {
    A,
    B,
    C,
}

impl Middle {
    pub const ALL: [Middle; 3] = [Middle::A, Middle::B, Middle::C];

    /// `(middle, end, end)` for the given degrees.
    pub fn split(self, a: u32, b: u32, c: u32) -> (u32, u32, u32) {
        match self {
            Middle::A => (a, b, c),
            Middle::B => (b, a, c),
            Middle::C => (c, a, b),
        }
    }
}

fn at_least_two(ds: &[u32]) -> Result<(), FormulaError> {
    match ds.iter().find(|&&d| d < 2) {
        Some(&d) => Err(FormulaError::DegreeBelowTwo(d)),
        None => Ok(()),
    }
}

fn sorted_triple(a: u32, b: u32, c: u32) -> Result<(u64, u64, u64), FormulaError> {
    at_least_two(&[a, b, c])?;
    if !(a >= b && b >= c) {
        return Err(FormulaError::NotNonIncreasing(a, b, c));
    }
    Ok((a as u64, b as u64, c as u64))
}

/// irr of the three-internal-vertex caterpillar with `middle` in the center:
/// `|m-p| + |m-q| + (m-1)(m-2) + (p-1)² + (q-1)²`.
pub fn k3_arrangement_irr(a: u32, b: u32, c: u32, middle: Middle) -> Result<u64, FormulaError> {
    sorted_triple(a, b, c)?;
    let (m, p, q) = middle.split(a, b, c);
    let (m, p, q) = (m as u64, p as u64, q as u64);
    Ok(m.abs_diff(p) + m.abs_diff(q) + (m - 1) * (m - 2) + (p - 1).pow(2) + (q - 1).pow(2))
}

/// sigma of the same caterpillar:
/// `(m-p)² + (m-q)² + (m-1)²(m-2) + (p-1)³ + (q-1)³`.
pub fn k3_arrangement_sigma(a: u32, b: u32, c: u32, middle: Middle) -> Result<u64, FormulaError> {
    sorted_triple(a, b, c)?;
    let (m, p, q) = middle.split(a, b, c);
    let (m, p, q) = (m as u64, p as u64, q as u64);
    Ok(m.abs_diff(p).pow(2)
        + m.abs_diff(q).pow(2)
        + (m - 1).pow(2) * (m - 2)
        + (p - 1).pow(3)
        + (q - 1).pow(3))
}

/// The maximum-irr expression exactly as originally published, with a
/// product `(c-1)(c-2)(a-c)(b-c)` in place of the additive terms. Kept so
/// reports can show where it disagrees with enumeration.
pub fn k3_irr_max_product_form(a: u32, b: u32, c: u32) -> Result<u64, FormulaError> {
    let (a, b, c) = sorted_triple(a, b, c)?;
    Ok((a - 1).pow(2) + (b - 1).pow(2) + (c - 1) * (c - 2) * (a - c) * (b - c))
}

/// `(a-1)² + (b-1)² + (c-1)(c-2) + (a-c) + (b-c)`: the smallest degree in
/// the middle.
pub fn k3_irr_max(a: u32, b: u32, c: u32) -> Result<u64, FormulaError> {
    let (a, b, c) = sorted_triple(a, b, c)?;
    Ok((a - 1).pow(2) + (b - 1).pow(2) + (c - 1) * (c - 2) + (a - c) + (b - c))
}

/// `(a-1)² + (c-1)² + (b-1)(b-2) + (a-c)`: the median degree in the middle.
pub fn k3_irr_min(a: u32, b: u32, c: u32) -> Result<u64, FormulaError> {
    let (a, b, c) = sorted_triple(a, b, c)?;
    Ok((a - 1).pow(2) + (c - 1).pow(2) + (b - 1) * (b - 2) + (a - c))
}

fn star_args(d: u32, arms: [u32; 3]) -> Result<(u64, [u64; 3]), FormulaError> {
    if d < 3 {
        return Err(FormulaError::CenterDegreeTooSmall(d));
    }
    at_least_two(&arms)?;
    Ok((d as u64, arms.map(|x| x as u64)))
}

/// irr of the four-internal-vertex star with center degree `d`:
/// `Σ(x-1)² + Σ|d-x| + (d-1)(d-3)` over the arms `x ∈ {a, b, c}`.
pub fn k4_star_irr(d: u32, a: u32, b: u32, c: u32) -> Result<u64, FormulaError> {
    let (d, arms) = star_args(d, [a, b, c])?;
    let arm_terms: u64 = arms.iter().map(|&x| (x - 1).pow(2) + d.abs_diff(x)).sum();
    Ok(arm_terms + (d - 1) * (d - 3))
}

/// sigma of the same star: `Σ(x-1)³ + Σ(d-x)² + (d-1)²(d-3)`.
pub fn k4_star_sigma(d: u32, a: u32, b: u32, c: u32) -> Result<u64, FormulaError> {
    let (d, arms) = star_args(d, [a, b, c])?;
    let arm_terms: u64 = arms
        .iter()
        .map(|&x| (x - 1).pow(3) + d.abs_diff(x).pow(2))
        .sum();
    Ok(arm_terms + (d - 1).pow(2) * (d - 3))
}

fn caterpillar_with(
    order: &[u32],
    pendant: impl Fn(u64) -> u64,
    link: impl Fn(u64) -> u64,
) -> Result<u64, FormulaError> {
    at_least_two(order)?;
    let ds: Vec<u64> = order.iter().map(|&d| d as u64).collect();
    let total = match ds.as_slice() {
        [] => return Err(FormulaError::EmptyOrder),
        [d] => d * pendant(d - 1),
        [first, inner @ .., last] => {
            let ends = (first - 1) * pendant(first - 1) + (last - 1) * pendant(last - 1);
            let interior: u64 = inner.iter().map(|&p| (p - 2) * pendant(p - 1)).sum();
            let links: u64 = ds.windows(2).map(|w| link(w[0].abs_diff(w[1]))).sum();
            ends + interior + links
        }
    };
    Ok(total)
}

/// irr of the caterpillar whose internal vertices form a path in `order`.
pub fn caterpillar_irr(order: &[u32]) -> Result<u64, FormulaError> {
    caterpillar_with(order, |x| x, |x| x)
}

pub fn caterpillar_sigma(order: &[u32]) -> Result<u64, FormulaError> {
    caterpillar_with(order, |x| x * x, |x| x * x)
}
