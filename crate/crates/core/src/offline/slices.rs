use crate::model::Instance;

/// Workload carried by the `i`-th server slice, `min(1, [a(t) - (i-1)]^+)`.
pub fn slice_workload(a: &[f64], i: u32) -> Vec<f64> {
    let off = f64::from(i) - 1.0;
    a.iter().map(|&at| (at - off).clamp(0.0, 1.0)).collect()
}

/// Energy carried by the `i`-th generator slice, `min(L, [e(t) - (i-1)L]^+)`.
pub fn slice_energy(e: &[f64], i: u32, capacity: f64) -> Vec<f64> {
    let off = (f64::from(i) - 1.0) * capacity;
    e.iter().map(|&et| (et - off).clamp(0.0, capacity)).collect()
}

/// Demand increment `d_t(i) - d_t(i-1)` of the `i`-th server at every slot.
pub fn slice_demand(inst: &Instance, i: u32) -> Vec<f64> {
    (0..inst.horizon()).map(|t| inst.marginal_demand(t, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn workload_slices() {
        let a = [2.3, 0.0, 1.0, 0.4];
        assert_eq!(slice_workload(&a, 1), vec![1.0, 0.0, 1.0, 0.4]);
        assert_eq!(slice_workload(&a, 2), vec![1.0, 0.0, 0.0, 0.0]);
        let s3 = slice_workload(&a, 3);
        assert!((s3[0] - 0.3).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn slices_sum_back(a in prop::collection::vec(0.0f64..7.0, 1..20), cap in 0.5f64..3.0) {
            let m = a.iter().map(|v| v.ceil() as u32).max().unwrap();
            for t in 0..a.len() {
                let s: f64 = (1..=m).map(|i| slice_workload(&a, i)[t]).sum();
                prop_assert!((s - a[t]).abs() < 1e-9);
            }
            let n = a.iter().map(|v| (v / cap).ceil() as u32).max().unwrap();
            for t in 0..a.len() {
                let s: f64 = (1..=n).map(|i| slice_energy(&a, i, cap)[t]).sum();
                prop_assert!((s - a[t]).abs() < 1e-9);
            }
            for i in 1..m {
                let hi = slice_workload(&a, i);
                let lo = slice_workload(&a, i + 1);
                prop_assert!(hi.iter().zip(&lo).all(|(h, l)| h >= l));
            }
        }
    }
}
