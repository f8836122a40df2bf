use std::cmp::Ordering;

/// Monomial orders on exponent vectors (variable 0 is the largest variable).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// Elimination order: variables `0..split` form the first block and
    /// dominate; ties inside each block are broken by graded reverse lex.
    Block(usize),
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::GrevLex
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b.iter()).rev() {
            if x != y {
                // smaller exponent in the last variable wins
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match *self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Block(split) => {
                let s = split.min(a.len());
                grevlex(&a[..s], &b[..s]).then_with(|| grevlex(&a[s..], &b[s..]))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrder::GrevLex;
        // x^2 > xy > y^2 > x > y > 1
        let ms: Vec<Vec<u32>> = vec![
            vec![2, 0],
            vec![1, 1],
            vec![0, 2],
            vec![1, 0],
            vec![0, 1],
            vec![0, 0],
        ];
        for w in ms.windows(2) {
            assert_eq!(o.cmp(&w[0], &w[1]), Ordering::Greater);
        }
        // x y z^0 vs x^0 y^0 z^2 in three vars: x*y > z^2
        assert_eq!(o.cmp(&[1, 1, 0], &[0, 0, 2]), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates_first_block() {
        let o = MonomialOrder::Block(1);
        assert_eq!(o.cmp(&[1, 0, 0], &[0, 5, 5]), Ordering::Greater);
        assert_eq!(o.cmp(&[0, 2, 0], &[0, 1, 0]), Ordering::Greater);
    }

    #[test]
    fn multiplicative_compatibility() {
        let orders = [
            MonomialOrder::Lex,
            MonomialOrder::GrevLex,
            MonomialOrder::Block(2),
        ];
        let ms: Vec<[u32; 3]> = vec![[0, 0, 1], [1, 2, 0], [3, 0, 0], [0, 1, 1], [2, 2, 2]];
        for o in orders {
            for a in &ms {
                for b in &ms {
                    for c in &ms {
                        let ac: Vec<u32> = a.iter().zip(c).map(|(x, y)| x + y).collect();
                        let bc: Vec<u32> = b.iter().zip(c).map(|(x, y)| x + y).collect();
                        assert_eq!(o.cmp(a, b), o.cmp(&ac, &bc));
                    }
                }
            }
        }
    }
}
