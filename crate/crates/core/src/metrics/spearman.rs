use crate::error::{Error, Result};

/// 1-based ranks with ties assigned their average rank.
pub fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i + 1;
        while j < order.len() && values[order[j]] == values[order[i]] {
            j += 1;
        }
        // positions i..j (0-based) share ranks i+1..=j
        let avg = (i + 1 + j) as f64 / 2.0;
        for &k in &order[i..j] {
            ranks[k] = avg;
        }
        i = j;
    }
    ranks
}

fn pearson(a: &[f64], b: &[f64]) -> Option<f64> {
    let n = a.len() as f64;
    let ma = a.iter().sum::<f64>() / n;
    let mb = b.iter().sum::<f64>() / n;
    let (mut cov, mut va, mut vb) = (0.0, 0.0, 0.0);
    for (x, y) in a.iter().zip(b) {
        let (dx, dy) = (x - ma, y - mb);
        cov += dx * dy;
        va += dx * dx;
        vb += dy * dy;
    }
    if va == 0.0 || vb == 0.0 {
        return None;
    }
    Some((cov / (va.sqrt() * vb.sqrt())).clamp(-1.0, 1.0))
}

/// Spearman rank correlation with tie-averaged ranks. `Ok(None)` when either
/// input has no rank variance (all values equal).
pub fn spearman(a: &[f64], b: &[f64]) -> Result<Option<f64>> {
    if a.len() != b.len() {
        return Err(Error::Domain(format!(
            "spearman inputs differ in length ({} vs {})",
            a.len(),
            b.len()
        )));
    }
    if a.len() < 2 {
        return Err(Error::Domain("spearman needs at least two observations".into()));
    }
    if a.iter().chain(b).any(|v| !v.is_finite()) {
        return Err(Error::Domain("spearman inputs must be finite".into()));
    }
    Ok(pearson(&average_ranks(a), &average_ranks(b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_average_ties() {
        assert_eq!(average_ranks(&[0.73, 0.80, 0.73, 0.88]), vec![1.5, 3.0, 1.5, 4.0]);
        assert_eq!(average_ranks(&[5.0, 5.0, 5.0]), vec![2.0, 2.0, 2.0]);
    }

    #[test]
    fn perfect_and_inverse() {
        let a = [0.3, 0.1, 0.9, 0.5];
        assert!((spearman(&a, &a).unwrap().unwrap() - 1.0).abs() < 1e-12);
        let b = [0.5, 0.9, 0.1, 0.3];
        assert!((spearman(&a, &b).unwrap().unwrap() + 1.0).abs() < 1e-12);
    }

    #[test]
    fn snowman_pho_columns() {
        // ranks (2,4,1,3) vs (1.5,3,1.5,4): 3.5 / sqrt(5 · 4.5)
        let r = spearman(&[0.85, 0.92, 0.79, 0.90], &[0.73, 0.80, 0.73, 0.88])
            .unwrap()
            .unwrap();
        assert!((r - 3.5 / 22.5f64.sqrt()).abs() < 1e-12);
        assert!((r - 0.7385).abs() < 1e-3);
    }

    #[test]
    fn constant_input_is_undefined() {
        assert_eq!(spearman(&[1.0, 2.0, 3.0], &[0.4, 0.4, 0.4]).unwrap(), None);
    }

    #[test]
    fn bad_lengths() {
        assert!(spearman(&[1.0], &[1.0]).is_err());
        assert!(spearman(&[1.0, 2.0], &[1.0]).is_err());
    }
}
