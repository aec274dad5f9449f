use crate::Partition;

/// Optional restrictions for [`partitions_filtered`].
#[derive(Debug, Clone, Default)]
pub struct PartitionFilter {
    /// Keep only partitions whose smallest part is at least this.
    pub min_part: Option<u32>,
    /// Keep only partitions of exactly this rank (|λ| − ℓ).
    pub exact_rank: Option<u32>,
}

/// All partitions of n in reverse-lexicographic order, (n) first, (1^n) last.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    partitions_filtered(n, &PartitionFilter::default())
}

/// All partitions of n satisfying `filter`, in reverse-lexicographic order.
pub fn partitions_filtered(n: u32, filter: &PartitionFilter) -> Vec<Partition> {
    let min_part = filter.min_part.unwrap_or(1).max(1);
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    descend(n, n, min_part, &mut prefix, &mut out);
    if let Some(r) = filter.exact_rank {
        out.retain(|p| p.rank() == r);
    }
    out
}

fn descend(remaining: u32, max_part: u32, min_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_valid(prefix.clone()));
        return;
    }
    // Largest next part first keeps the output reverse-lexicographic.
    let hi = max_part.min(remaining);
    for part in (min_part..=hi).rev() {
        prefix.push(part);
        descend(remaining - part, part, min_part, prefix, out);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pt;

    #[test]
    fn counts_match_euler() {
        // p(0..=12)
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(partitions_of(n as u32).len(), want, "p({n})");
        }
    }

    #[test]
    fn order_of_partitions_of_6() {
        let got: Vec<String> = partitions_of(6).iter().map(|p| p.to_string()).collect();
        let want = ["6", "5,1", "4,2", "4,1,1", "3,3", "3,2,1", "3,1,1,1", "2,2,2", "2,2,1,1", "2,1,1,1,1", "1,1,1,1,1,1"];
        assert_eq!(got, want);
    }

    #[test]
    fn filters() {
        let f = PartitionFilter { min_part: Some(2), exact_rank: Some(2) };
        assert_eq!(partitions_filtered(4, &f), vec![pt("2,2")]);

        let f = PartitionFilter { min_part: Some(2), exact_rank: Some(4) };
        assert_eq!(partitions_filtered(6, &f), vec![pt("4,2"), pt("3,3")]);

        assert_eq!(partitions_of(0), vec![crate::Partition::empty()]);
    }

    #[test]
    fn rank_window_for_part_at_least_two() {
        // With min_part = 2 and exact rank i, results exist only when
        // i+1 <= n <= 2i.
        for i in 0..=6u32 {
            for n in 0..=14u32 {
                let f = PartitionFilter { min_part: Some(2), exact_rank: Some(i) };
                let nonempty = !partitions_filtered(n, &f).is_empty();
                let in_window = i < n && n <= 2 * i || (i == 0 && n == 0);
                assert_eq!(nonempty, in_window, "n={n} i={i}");
            }
        }
    }
}
