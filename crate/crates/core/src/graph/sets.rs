/// Lower bound on `|A_1 ∩ .. ∩ A_k|` from the set sizes and the size of
/// their union: `Σ|A_i| - (k-1)|∪A_i|`. May be negative, in which case it
/// carries no information.
pub fn intersection_lower_bound(sizes: &[usize], union_size: usize) -> i64 {
    let k = sizes.len() as i64;
    if k == 0 {
        return union_size as i64;
    }
    sizes.iter().map(|&s| s as i64).sum::<i64>() - (k - 1) * union_size as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_sets() {
        assert_eq!(intersection_lower_bound(&[2, 2], 3), 1);
    }

    #[test]
    fn three_large_sets() {
        let (n, c) = (100usize, 7usize);
        assert_eq!(intersection_lower_bound(&[n - c; 3], n), (n - 3 * c) as i64);
    }

    #[test]
    fn single_set_is_exact() {
        assert_eq!(intersection_lower_bound(&[5], 9), 5);
    }
}
