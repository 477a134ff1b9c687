use super::Identity;
use crate::word::{Letter, Word};

/// The pair `uₙ ≈ vₙ`: `u₀ = a²b²`, `v₀ = b²a²`, and each step prepends
/// `a tₖ₊₁` (even `k`) or `b tₖ₊₁` (odd `k`) to both sides.
pub fn sigma_pair(n: usize) -> Identity {
    let (a, b) = (Letter::new('a'), Letter::new('b'));
    let mut u = vec![a, a, b, b];
    let mut v = vec![b, b, a, a];
    for k in 0..n {
        let head = if k % 2 == 0 { a } else { b };
        let prefix = [head, Letter::indexed('t', k as u32 + 1)];
        u.splice(0..0, prefix);
        v.splice(0..0, prefix);
    }
    Identity::new(Word::from_letters(u), Word::from_letters(v))
}

/// `x y₁² y₂² ⋯ yₙ² x ≈ x y₁² x y₂² x ⋯ x yₙ² x`.
pub fn long_pair(n: usize) -> Identity {
    assert!(n >= 1, "long_pair needs n ≥ 1");
    let x = Letter::new('x');
    let ys: Vec<Letter> = (1..=n as u32).map(|i| Letter::indexed('y', i)).collect();
    let mut left = vec![x];
    let mut right = vec![x];
    for &y in &ys {
        left.extend([y, y]);
        right.extend([y, y, x]);
    }
    left.push(x);
    Identity::new(Word::from_letters(left), Word::from_letters(right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::CongruenceId;
    use crate::word::w;

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_pair(0), Identity::new(w("a^2b^2"), w("b^2a^2")));
        assert_eq!(sigma_pair(1), Identity::new(w("a t1 a^2 b^2"), w("a t1 b^2 a^2")));
        assert_eq!(sigma_pair(2), Identity::new(w("b t2 a t1 a^2 b^2"), w("b t2 a t1 b^2 a^2")));
        assert_eq!(sigma_pair(3).left, w("a t3 b t2 a t1 a^2 b^2"));
    }

    #[test]
    fn long_examples() {
        assert!(long_pair(1).is_trivial());
        assert_eq!(long_pair(2), Identity::new(w("x y1^2 y2^2 x"), w("x y1^2 x y2^2 x")));
        assert_eq!(long_pair(3).right, w("x y1^2 x y2^2 x y3^2 x"));
    }

    #[test]
    fn beta_relations() {
        for n in 1..=5 {
            let p = long_pair(n);
            assert!(CongruenceId::Beta.equivalent(&p.left, &p.right), "long {n}");
        }
        for n in 0..=5 {
            let p = sigma_pair(n);
            assert!(!CongruenceId::Beta.equivalent(&p.left, &p.right), "sigma {n}");
        }
    }
}
