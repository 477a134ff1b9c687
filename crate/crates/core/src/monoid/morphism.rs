use super::FiniteMonoid;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomKind {
    Onto,
    Iso,
}

/// Element map of a homomorphism between two fixed tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hom {
    pub map: Vec<usize>,
}

impl Hom {
    /// Re-checks the homomorphism laws from scratch.
    pub fn is_hom(&self, source: &FiniteMonoid, target: &FiniteMonoid) -> bool {
        if self.map.len() != source.size() || self.map.iter().any(|&y| y >= target.size()) {
            return false;
        }
        if let Some(e) = source.identity() {
            if target.identity() != Some(self.map[e]) {
                return false;
            }
        }
        (0..source.size())
            .all(|x| (0..source.size()).all(|y| self.map[source.mul(x, y)] == target.mul(self.map[x], self.map[y])))
    }

    pub fn is_onto(&self, target: &FiniteMonoid) -> bool {
        let mut hit = vec![false; target.size()];
        for &y in &self.map {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.map.iter().all(|y| seen.insert(*y))
    }
}

/// First homomorphism `m → n` of the requested kind in a fixed search order:
/// images of a deterministic generating set of `m` are tried in element
/// order, each partial choice being propagated over the submonoid it
/// generates and pruned on conflict.
pub fn morphism_search(m: &FiniteMonoid, n: &FiniteMonoid, kind: HomKind) -> Option<Hom> {
    if kind == HomKind::Iso && m.size() != n.size() {
        return None;
    }
    if m.size() < n.size() {
        return None;
    }
    if m.identity().is_some() && n.identity().is_none() {
        return None;
    }
    let gens = m.generating_set();
    let mut images = Vec::with_capacity(gens.len());
    search(m, n, kind, &gens, &mut images)
}

fn search(m: &FiniteMonoid, n: &FiniteMonoid, kind: HomKind, gens: &[usize], images: &mut Vec<usize>) -> Option<Hom> {
    let partial = propagate(m, n, &gens[..images.len()], images)?;
    if images.len() == gens.len() {
        let hom = Hom { map: partial.into_iter().map(|y| y.expect("generators cover the source")).collect() };
        let ok = hom.is_hom(m, n)
            && match kind {
                HomKind::Onto => hom.is_onto(n),
                HomKind::Iso => hom.is_onto(n) && hom.is_injective(),
            };
        return ok.then_some(hom);
    }
    for y in 0..n.size() {
        images.push(y);
        if let Some(h) = search(m, n, kind, gens, images) {
            return Some(h);
        }
        images.pop();
    }
    None
}

/// Extends `gens[i] ↦ images[i]` over the submonoid they generate; `None` on conflict.
fn propagate(m: &FiniteMonoid, n: &FiniteMonoid, gens: &[usize], images: &[usize]) -> Option<Vec<Option<usize>>> {
    let mut map: Vec<Option<usize>> = vec![None; m.size()];
    let mut stack = Vec::new();
    let assign = |map: &mut Vec<Option<usize>>, stack: &mut Vec<usize>, x: usize, y: usize| -> bool {
        match map[x] {
            Some(old) => old == y,
            None => {
                map[x] = Some(y);
                stack.push(x);
                true
            }
        }
    };
    if let (Some(e), Some(f)) = (m.identity(), n.identity()) {
        assign(&mut map, &mut stack, e, f);
    }
    for (&g, &y) in gens.iter().zip(images) {
        if !assign(&mut map, &mut stack, g, y) {
            return None;
        }
    }
    while let Some(x) = stack.pop() {
        let fx = map[x].expect("assigned");
        for (&g, &fg) in gens.iter().zip(images) {
            if !assign(&mut map, &mut stack, m.mul(x, g), n.mul(fx, fg)) {
                return None;
            }
        }
    }
    Some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::fixture;

    #[test]
    fn identity_is_the_first_iso() {
        for name in ["A1", "E1", "B01", "Q1"] {
            let m = fixture(name).unwrap();
            let h = morphism_search(&m, &m, HomKind::Iso).unwrap();
            assert_eq!(h.map, (0..m.size()).collect::<Vec<_>>(), "{name}");
        }
    }

    #[test]
    fn collapse_onto_trivial() {
        let l21 = fixture("L21").unwrap();
        let h = morphism_search(&l21, &FiniteMonoid::trivial(), HomKind::Onto).unwrap();
        assert_eq!(h.map, vec![0, 0, 0]);
    }

    #[test]
    fn no_iso_between_different_sizes_or_shapes() {
        let a01 = fixture("A01").unwrap();
        let b01 = fixture("B01").unwrap();
        assert!(morphism_search(&a01, &b01, HomKind::Iso).is_none());
        assert!(morphism_search(&b01, &fixture("E1").unwrap(), HomKind::Onto).is_none());
    }

    #[test]
    fn opposite_of_a01_is_isomorphic_to_a01() {
        // ⟨a,b ∣ a²=a, b²=b, ab=0⟩ reversed swaps the roles of a and b.
        let a01 = fixture("A01").unwrap();
        let h = morphism_search(&a01, &a01.opposite(), HomKind::Iso).unwrap();
        assert!(h.is_hom(&a01, &a01.opposite()));
    }
}
