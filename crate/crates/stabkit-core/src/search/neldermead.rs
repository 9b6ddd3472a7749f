//! Nelder-Mead simplex minimization with a hard evaluation budget.

use alloc::vec::Vec;

const REFLECT: f64 = 1.0;
const EXPAND: f64 = 2.0;
const CONTRACT: f64 = 0.5;
const SHRINK: f64 = 0.5;

/// Minimizes `f` starting from the given simplex (`n + 1` vertices of
/// dimension `n`), spending at most `max_evals` evaluations. Returns the
/// best vertex, its value, and the number of evaluations used.
pub fn minimize<F>(mut f: F, mut simplex: Vec<Vec<f64>>, max_evals: usize) -> (Vec<f64>, f64, usize)
where
    F: FnMut(&[f64]) -> f64,
{
    let n = simplex[0].len();
    let mut evals = 0usize;
    let mut values: Vec<f64> = Vec::with_capacity(simplex.len());
    for v in &simplex {
        values.push(f(v));
        evals += 1;
        if evals >= max_evals {
            break;
        }
    }
    while values.len() < simplex.len() {
        // budget ran out during initialization; score the rest as worst
        values.push(f64::INFINITY);
    }

    while evals < max_evals {
        let mut order: Vec<usize> = (0..simplex.len()).collect();
        order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
        let best = order[0];
        let worst = order[n];
        let second_worst = order[n - 1];

        if values[worst] - values[best] <= 1e-14 * (1.0 + values[best].abs()) {
            break;
        }

        let mut centroid = alloc::vec![0.0; n];
        for &i in order.iter().take(n) {
            for (c, x) in centroid.iter_mut().zip(&simplex[i]) {
                *c += x / n as f64;
            }
        }
        let blend = |a: f64| -> Vec<f64> {
            centroid
                .iter()
                .zip(&simplex[worst])
                .map(|(c, w)| c + a * (c - w))
                .collect()
        };

        let reflected = blend(REFLECT);
        let fr = f(&reflected);
        evals += 1;

        if fr < values[best] {
            if evals < max_evals {
                let expanded = blend(EXPAND);
                let fe = f(&expanded);
                evals += 1;
                if fe < fr {
                    simplex[worst] = expanded;
                    values[worst] = fe;
                    continue;
                }
            }
            simplex[worst] = reflected;
            values[worst] = fr;
        } else if fr < values[second_worst] {
            simplex[worst] = reflected;
            values[worst] = fr;
        } else {
            if evals < max_evals {
                let contracted = blend(-CONTRACT);
                let fc = f(&contracted);
                evals += 1;
                if fc < values[worst] {
                    simplex[worst] = contracted;
                    values[worst] = fc;
                    continue;
                }
            }
            // shrink everything toward the best vertex
            let anchor = simplex[best].clone();
            for i in 0..simplex.len() {
                if i == best {
                    continue;
                }
                for (x, a) in simplex[i].iter_mut().zip(&anchor) {
                    *x = a + SHRINK * (*x - a);
                }
                if evals < max_evals {
                    values[i] = f(&simplex[i]);
                    evals += 1;
                } else {
                    values[i] = f64::INFINITY;
                }
            }
        }
    }

    let mut best = 0;
    for i in 1..values.len() {
        if values[i].total_cmp(&values[best]).is_lt() {
            best = i;
        }
    }
    (simplex.swap_remove(best), values[best], evals)
}
