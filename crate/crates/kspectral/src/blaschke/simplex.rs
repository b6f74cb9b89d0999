//! Derivative-free simplex minimizer for the root optimization.
//!
//! The objective (negated largest singular value as a function of root
//! parameters) is continuous but not smooth, so a Nelder-Mead style simplex
//! search with standard reflection/expansion/contraction/shrink moves is
//! used instead of a gradient method. Restarts and polish passes live in
//! the caller.

pub(crate) struct SimplexResult {
    pub point: Vec<f64>,
    pub value: f64,
    /// Objective evaluations spent; the budget tests pin this down.
    #[cfg_attr(not(test), allow(dead_code))]
    pub evals: usize,
}

struct Vertex {
    x: Vec<f64>,
    f: f64,
}

/// Minimizes `f` from `start`, with an axis-aligned initial simplex of edge
/// `initial_step`. Stops when the value spread across the simplex falls
/// below `value_tol·(1 + |f_best|)` or the evaluation budget runs out.
pub(crate) fn nelder_mead(
    f: &mut dyn FnMut(&[f64]) -> f64,
    start: &[f64],
    initial_step: f64,
    value_tol: f64,
    max_evals: usize,
) -> SimplexResult {
    let m = start.len();
    if m == 0 {
        let value = f(start);
        return SimplexResult {
            point: Vec::new(),
            value,
            evals: 1,
        };
    }

    let mut evals = 0usize;
    let mut eval = |x: &[f64], evals: &mut usize| {
        *evals += 1;
        let v = f(x);
        if v.is_nan() {
            f64::INFINITY
        } else {
            v
        }
    };

    let mut simplex: Vec<Vertex> = Vec::with_capacity(m + 1);
    simplex.push(Vertex {
        x: start.to_vec(),
        f: eval(start, &mut evals),
    });
    for i in 0..m {
        let mut x = start.to_vec();
        x[i] += initial_step;
        let fx = eval(&x, &mut evals);
        simplex.push(Vertex { x, f: fx });
    }

    while evals < max_evals {
        simplex.sort_by(|a, b| a.f.total_cmp(&b.f));
        let best = simplex[0].f;
        let worst = simplex[m].f;
        if (worst - best).abs() <= value_tol * (1.0 + best.abs()) {
            break;
        }

        // Centroid of all vertices but the worst.
        let mut centroid = vec![0.0; m];
        for v in &simplex[..m] {
            for (c, xi) in centroid.iter_mut().zip(&v.x) {
                *c += xi / m as f64;
            }
        }
        let combine = |t: f64| -> Vec<f64> {
            centroid
                .iter()
                .zip(&simplex[m].x)
                .map(|(c, w)| c + t * (c - w))
                .collect()
        };

        let xr = combine(1.0);
        let fr = eval(&xr, &mut evals);
        if fr < simplex[0].f {
            let xe = combine(2.0);
            let fe = eval(&xe, &mut evals);
            simplex[m] = if fe < fr {
                Vertex { x: xe, f: fe }
            } else {
                Vertex { x: xr, f: fr }
            };
            continue;
        }
        if fr < simplex[m - 1].f {
            simplex[m] = Vertex { x: xr, f: fr };
            continue;
        }

        let (xc, fc) = if fr < simplex[m].f {
            let x = combine(0.5);
            let fx = eval(&x, &mut evals);
            (x, fx)
        } else {
            let x = combine(-0.5);
            let fx = eval(&x, &mut evals);
            (x, fx)
        };
        if fc < fr.min(simplex[m].f) {
            simplex[m] = Vertex { x: xc, f: fc };
            continue;
        }

        // Shrink every vertex halfway toward the best one.
        let best_x = simplex[0].x.clone();
        for v in simplex.iter_mut().skip(1) {
            for (xi, bi) in v.x.iter_mut().zip(&best_x) {
                *xi = bi + 0.5 * (*xi - *bi);
            }
            v.f = eval(&v.x, &mut evals);
        }
    }

    simplex.sort_by(|a, b| a.f.total_cmp(&b.f));
    SimplexResult {
        point: simplex[0].x.clone(),
        value: simplex[0].f,
        evals,
    }
}
