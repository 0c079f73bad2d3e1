//! Finite-difference derivative oracles.

/// n-th central difference quotient with step h:
/// h^{−n} Σ_{j=0}^{n} (−1)^j C(n, j) f(t + (n/2 − j)h). Error O(h²).
pub fn central_difference<F: Fn(f64) -> f64>(f: &F, t: f64, order: usize, h: f64) -> f64 {
    let half = order as f64 / 2.0;
    let mut binom = 1.0;
    let mut acc = 0.0;
    for j in 0..=order {
        if j > 0 {
            binom = binom * (order - j + 1) as f64 / j as f64;
        }
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * binom * f(t + (half - j as f64) * h);
    }
    acc / h.powi(order as i32)
}

/// n-th derivative by Richardson extrapolation of central differences at
/// steps h₀, h₀/2, …, h₀/2^{levels−1}. Returns the tableau entry with the
/// smallest estimated error, where each entry's error is the larger of its
/// extrapolation change and the roundoff noise of its finest difference.
pub fn richardson_derivative<F: Fn(f64) -> f64>(f: &F, t: f64, order: usize, h0: f64, levels: usize) -> f64 {
    if order == 0 {
        return f(t);
    }
    let levels = levels.max(1);
    let scale = f(t).abs().max(f64::MIN_POSITIVE);
    let noise = |h: f64| 4.0 * f64::powi(2.0, order as i32) * f64::EPSILON * scale / h.powi(order as i32);
    let mut prev_row = vec![central_difference(f, t, order, h0)];
    let mut best = prev_row[0];
    let mut best_err = f64::INFINITY;
    for i in 1..levels {
        let h = h0 / f64::powi(2.0, i as i32);
        let floor = noise(h);
        let mut row = Vec::with_capacity(i + 1);
        row.push(central_difference(f, t, order, h));
        let mut factor = 4.0;
        for j in 1..=i {
            let improved = row[j - 1] + (row[j - 1] - prev_row[j - 1]) / (factor - 1.0);
            let err = (improved - row[j - 1])
                .abs()
                .max((improved - prev_row[j - 1]).abs())
                .max(floor * factor / (factor - 1.0));
            if err <= best_err {
                best_err = err;
                best = improved;
            }
            row.push(improved);
            factor *= 4.0;
        }
        prev_row = row;
    }
    best
}

/// Default starting step for an order-n derivative at t > 0; the stencil
/// stays inside [3t/4, 5t/4].
pub fn default_step(t: f64, order: usize) -> f64 {
    0.5_f64.min(t / (2 * order.max(1)) as f64)
}

/// (g(x+h) − 2g(x) + g(x−h)) / h²
pub fn second_difference<F: Fn(f64) -> f64>(g: &F, x: f64, h: f64) -> f64 {
    (g(x + h) - 2.0 * g(x) + g(x - h)) / (h * h)
}
