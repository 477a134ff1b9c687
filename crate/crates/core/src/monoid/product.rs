use super::FiniteMonoid;

/// A fresh identity `1` placed first; the remaining elements keep their order.
pub fn adjoin_identity(s: &FiniteMonoid) -> FiniteMonoid {
    let n = s.size();
    let mut labels = Vec::with_capacity(n + 1);
    labels.push(fresh_label(s, "1"));
    labels.extend(s.labels().iter().cloned());
    let mut table = Vec::with_capacity((n + 1) * (n + 1));
    table.extend(0..=n);
    for x in 0..n {
        table.push(x + 1);
        table.extend((0..n).map(|y| s.mul(x, y) + 1));
    }
    let generators = s.generators().iter().map(|&(l, e)| (l, e + 1)).collect();
    FiniteMonoid::from_flat(labels, Some(0), s.zero().map(|z| z + 1), table).with_generators(generators)
}

fn fresh_label(s: &FiniteMonoid, base: &str) -> String {
    let mut label = base.to_string();
    while s.element(&label).is_some() {
        label.push('\'');
    }
    label
}

/// Componentwise product; element `(x, y)` has index `x * |n| + y`.
pub fn direct_product(m: &FiniteMonoid, n: &FiniteMonoid) -> FiniteMonoid {
    let (p, q) = (m.size(), n.size());
    let size = p * q;
    let labels = (0..p).flat_map(|x| (0..q).map(move |y| (x, y))).map(|(x, y)| format!("({},{})", m.label(x), n.label(y))).collect();
    let mut table = Vec::with_capacity(size * size);
    for x1 in 0..p {
        for y1 in 0..q {
            for x2 in 0..p {
                for y2 in 0..q {
                    table.push(m.mul(x1, x2) * q + n.mul(y1, y2));
                }
            }
        }
    }
    let pair = |a: Option<usize>, b: Option<usize>| Some(a? * q + b?);
    FiniteMonoid::from_flat(labels, pair(m.identity(), n.identity()), pair(m.zero(), n.zero()), table)
}

/// Anything that is a direct product of finite monoids. Equational checks
/// run factor by factor and never enumerate the product carrier.
pub trait Factors {
    fn factors(&self) -> Vec<&FiniteMonoid>;

    /// Size of the product carrier.
    fn carrier_size(&self) -> usize {
        self.factors().iter().map(|m| m.size()).product()
    }
}

impl Factors for FiniteMonoid {
    fn factors(&self) -> Vec<&FiniteMonoid> {
        vec![self]
    }
}

/// Direct product kept as its list of factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidProduct {
    pub factors: Vec<FiniteMonoid>,
}

impl MonoidProduct {
    pub fn new(factors: Vec<FiniteMonoid>) -> MonoidProduct {
        MonoidProduct { factors }
    }

    /// A product is valid when each factor is.
    pub fn is_valid(&self) -> bool {
        self.factors.iter().all(|m| m.validate().is_valid())
    }

    pub fn opposite(&self) -> MonoidProduct {
        MonoidProduct { factors: self.factors.iter().map(FiniteMonoid::opposite).collect() }
    }

    /// Materializes the full table; only sensible for small factors.
    pub fn materialize(&self) -> FiniteMonoid {
        let mut iter = self.factors.iter();
        let first = iter.next().cloned().unwrap_or_else(FiniteMonoid::trivial);
        iter.fold(first, |acc, m| direct_product(&acc, m))
    }
}

impl Factors for MonoidProduct {
    fn factors(&self) -> Vec<&FiniteMonoid> {
        self.factors.iter().collect()
    }
}

impl<T: Factors + ?Sized> Factors for &T {
    fn factors(&self) -> Vec<&FiniteMonoid> {
        (**self).factors()
    }
}
