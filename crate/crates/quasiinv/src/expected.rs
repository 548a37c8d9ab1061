use crate::error::QuasiError;
use crate::hilbert::HilbertSeries;
use crate::kostka::{content, dimension, kostka, partitions_of, Partition};

/// `h_π(t) = K_π(t)/Π_{i≤|π|}(1 − t^i)` up to `t^{len−1}`.
pub fn isotypic_invariant_series(p: &[usize], len: usize) -> HilbertSeries {
    let n: usize = p.iter().sum();
    HilbertSeries::rational(&kostka(p), &(1..=n).collect::<Vec<_>>(), len)
}

/// `t^{m(N(N−1)/2 − Σ cont(π_r))} Π_r h_{π_r}(t)`: the graded multiplicity of
/// `π_1 ⊗ … ⊗ π_l` in the twisted quasiinvariants with blocks of sizes
/// `parts`, for generic twists.
pub fn expected_twisted_series(
    parts: &[usize],
    m: u32,
    reps: &[Partition],
    len: usize,
) -> Result<HilbertSeries, QuasiError> {
    if parts.len() != reps.len() {
        return Err(QuasiError::BadSpec(format!("{} blocks but {} representations", parts.len(), reps.len())));
    }
    for (np, p) in parts.iter().zip(reps) {
        if p.iter().sum::<usize>() != *np || p.windows(2).any(|w| w[0] < w[1]) || p.contains(&0) {
            return Err(QuasiError::BadSpec(format!("{p:?} is not a partition of {np}")));
        }
    }
    let n: usize = parts.iter().sum();
    let shift = m as i64 * (n as i64 * (n as i64 - 1) / 2 - reps.iter().map(|p| content(p)).sum::<i64>());
    let shift = usize::try_from(shift).expect("the content never exceeds N(N−1)/2");
    let mut acc = HilbertSeries::rational(&[1], &[], len);
    for p in reps {
        acc = acc.mul(&isotypic_invariant_series(p, len));
    }
    Ok(acc.shift(shift))
}

/// The full Hilbert series: `Σ_{π_1..π_l} Π_r dim(π_r) · h_{π_1..π_l}(t)`.
pub fn expected_total_series(parts: &[usize], m: u32, len: usize) -> Result<HilbertSeries, QuasiError> {
    let mut tuples: Vec<Vec<Partition>> = vec![vec![]];
    for &np in parts {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                partitions_of(np).into_iter().map(move |p| {
                    let mut t = t.clone();
                    t.push(p);
                    t
                })
            })
            .collect();
    }
    let mut acc = HilbertSeries::new(vec![0; len]);
    for reps in tuples {
        let mult: usize = reps.iter().map(|p| dimension(p)).product();
        acc = acc.add(&expected_twisted_series(parts, m, &reps, len)?.scale(mult as i64));
    }
    Ok(acc)
}
