//! Irredundant m-irreducible decompositions of monomial ideals by splitting.
//!
//! This is the ideal-level route to a decomposition. It knows nothing about
//! graphs, so it serves as the independent check on the cover-based route in
//! [`crate::cover`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;
use std::sync::Arc;

use crate::error::AlgebraError;
use crate::monomial::{Exponent, Monomial, MonomialIdeal, VariableContext};

pub const DEFAULT_COMPONENT_CAP: usize = 100_000;

/// `P(V', δ')`: the ideal generated by the pure powers `X_i^{δ'(i)}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IrreducibleComponent {
    context: Arc<VariableContext>,
    powers: BTreeMap<usize, Exponent>,
}

impl IrreducibleComponent {
    pub fn new(
        context: Arc<VariableContext>,
        powers: impl IntoIterator<Item = (usize, Exponent)>,
    ) -> Result<Self, AlgebraError> {
        let dimension = context.dimension();
        let mut map = BTreeMap::new();
        for (index, exponent) in powers {
            if index >= dimension {
                return Err(AlgebraError::VariableOutOfRange { index, dimension });
            }
            if exponent == 0 {
                return Err(AlgebraError::ZeroComponentExponent { index });
            }
            if map.insert(index, exponent).is_some() {
                return Err(AlgebraError::RepeatedComponentVariable { index });
            }
        }
        Ok(Self {
            context,
            powers: map,
        })
    }

    /// `P(∅) = 0`.
    pub fn zero(context: Arc<VariableContext>) -> Self {
        Self {
            context,
            powers: BTreeMap::new(),
        }
    }

    /// Reads an m-irreducible ideal back as a component.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Option<Self> {
        if !ideal.is_m_irreducible() {
            return None;
        }
        let powers = ideal
            .generators()
            .iter()
            .map(|g| g.as_pure_power().expect("pure power"))
            .collect();
        Some(Self {
            context: ideal.context().clone(),
            powers,
        })
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let d = self.context.dimension();
        let gens = self
            .powers
            .iter()
            .map(|(&i, &e)| Monomial::pure_power(d, i, e).expect("index checked"));
        MonomialIdeal::new(self.context.clone(), gens).expect("same context")
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.context
    }

    pub fn powers(&self) -> &BTreeMap<usize, Exponent> {
        &self.powers
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.powers.keys().copied()
    }

    pub fn m_height(&self) -> usize {
        self.powers.len()
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        self.powers.iter().any(|(&i, &e)| m.exponents()[i] >= e)
    }

    /// `other ⊆ self`, decided by membership of each generator of `other`.
    pub fn contains(&self, other: &IrreducibleComponent) -> bool {
        other
            .powers
            .iter()
            .all(|(i, e)| self.powers.get(i).is_some_and(|mine| mine <= e))
    }
}

impl Ord for IrreducibleComponent {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.powers.cmp(&other.powers)
    }
}

impl PartialOrd for IrreducibleComponent {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.powers.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .powers
            .iter()
            .map(|(&i, &e)| {
                if e == 1 {
                    self.context.name(i).to_string()
                } else {
                    format!("{}^{}", self.context.name(i), e)
                }
            })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// An ordered list of m-irreducible components whose intersection is the
/// decomposed ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    context: Arc<VariableContext>,
    components: Vec<IrreducibleComponent>,
    irredundant: bool,
}

impl Decomposition {
    /// Wraps components that are already known to be canonical and
    /// irredundant.
    pub(crate) fn irredundant_unchecked(
        context: Arc<VariableContext>,
        mut components: Vec<IrreducibleComponent>,
    ) -> Self {
        components.sort();
        Self {
            context,
            components,
            irredundant: true,
        }
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.context
    }

    pub fn components(&self) -> &[IrreducibleComponent] {
        &self.components
    }

    pub fn into_components(self) -> Vec<IrreducibleComponent> {
        self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_irredundant(&self) -> bool {
        self.irredundant
    }

    /// Intersection of all components; the unit ideal for an empty list.
    pub fn intersection(&self) -> MonomialIdeal {
        self.components
            .iter()
            .fold(MonomialIdeal::unit(self.context.clone()), |acc, c| {
                acc.intersect(&c.to_ideal()).expect("same context")
            })
    }

    /// Minimum support size over the components.
    pub fn m_height(&self) -> Result<usize, AlgebraError> {
        self.components
            .iter()
            .map(IrreducibleComponent::m_height)
            .min()
            .ok_or(AlgebraError::EmptyDecomposition)
    }

    /// True iff every component has the same support size.
    pub fn is_m_unmixed(&self) -> bool {
        let mut heights = self.components.iter().map(IrreducibleComponent::m_height);
        match heights.next() {
            Some(h) => heights.all(|x| x == h),
            None => true,
        }
    }
}

/// Removes duplicates and every component containing another, then sorts.
pub fn irredundantize(
    components: Vec<IrreducibleComponent>,
) -> Result<Decomposition, AlgebraError> {
    let context = components
        .first()
        .ok_or(AlgebraError::EmptyDecomposition)?
        .context
        .clone();
    if components.iter().any(|c| c.context != context) {
        return Err(AlgebraError::ContextMismatch);
    }
    Ok(Decomposition::irredundant_unchecked(
        context,
        prune(components),
    ))
}

pub fn m_height_of(decomposition: &Decomposition) -> Result<usize, AlgebraError> {
    decomposition.m_height()
}

/// All components of the irredundant decomposition share one m-height.
pub fn is_m_unmixed_ideal(ideal: &MonomialIdeal) -> Result<bool, AlgebraError> {
    Ok(split_decompose(ideal)?.is_m_unmixed())
}

pub fn split_decompose(ideal: &MonomialIdeal) -> Result<Decomposition, AlgebraError> {
    SplitDecomposer::default().decompose(ideal)
}

/// Memoizing splitter.
///
/// If a minimal generator `f` is not a pure power, write `f = u * v` with
/// `u = X_i^{e_i}` for the first variable in the support of `f`; then
/// `I = (I + (u)) ∩ (I + (v))`. Recursion stops at m-irreducible ideals.
/// Intermediate lists are pruned to irredundancy; pairwise pruning is
/// complete because an m-irreducible ideal containing an intersection of
/// monomial ideals contains one of them.
#[derive(Debug)]
pub struct SplitDecomposer {
    component_cap: usize,
    memo: HashMap<Vec<Monomial>, Rc<Vec<IrreducibleComponent>>>,
}

impl Default for SplitDecomposer {
    fn default() -> Self {
        Self::with_cap(DEFAULT_COMPONENT_CAP)
    }
}

impl SplitDecomposer {
    pub fn with_cap(component_cap: usize) -> Self {
        Self {
            component_cap,
            memo: HashMap::new(),
        }
    }

    pub fn decompose(&mut self, ideal: &MonomialIdeal) -> Result<Decomposition, AlgebraError> {
        if ideal.is_unit() {
            return Err(AlgebraError::UnitIdeal);
        }
        let components = self.split(ideal)?;
        Ok(Decomposition::irredundant_unchecked(
            ideal.context().clone(),
            components.as_ref().clone(),
        ))
    }

    fn split(
        &mut self,
        ideal: &MonomialIdeal,
    ) -> Result<Rc<Vec<IrreducibleComponent>>, AlgebraError> {
        if let Some(hit) = self.memo.get(ideal.generators()) {
            return Ok(hit.clone());
        }

        let pivot = ideal
            .generators()
            .iter()
            .find(|g| g.as_pure_power().is_none());

        let components = match pivot {
            None => vec![IrreducibleComponent::from_ideal(ideal).expect("m-irreducible")],
            Some(f) => {
                let i = f.support().next().expect("not the monomial 1");
                let u = Monomial::pure_power(f.dimension(), i, f.exponents()[i])?;
                let v = f.quotient(&u).expect("u divides f");
                let left = self.split(&ideal.with_generator(u)?)?;
                let right = self.split(&ideal.with_generator(v)?)?;
                let mut all = Vec::with_capacity(left.len() + right.len());
                all.extend(left.iter().cloned());
                all.extend(right.iter().cloned());
                prune(all)
            }
        };

        if components.len() > self.component_cap {
            return Err(AlgebraError::ComponentCapExceeded {
                cap: self.component_cap,
            });
        }
        let components = Rc::new(components);
        self.memo
            .insert(ideal.generators().to_vec(), components.clone());
        Ok(components)
    }
}

fn prune(mut components: Vec<IrreducibleComponent>) -> Vec<IrreducibleComponent> {
    components.sort();
    components.dedup();
    let keep: Vec<bool> = components
        .iter()
        .enumerate()
        .map(|(i, c)| {
            !components
                .iter()
                .enumerate()
                .any(|(j, d)| i != j && c.contains(d))
        })
        .collect();
    components
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(d: usize) -> Arc<VariableContext> {
        Arc::new(VariableContext::new(d).unwrap())
    }

    fn ideal(c: &Arc<VariableContext>, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(c.clone(), gens.iter().map(|g| Monomial::new(g.to_vec()))).unwrap()
    }

    fn comp(c: &Arc<VariableContext>, powers: &[(usize, u32)]) -> IrreducibleComponent {
        IrreducibleComponent::new(c.clone(), powers.iter().copied()).unwrap()
    }

    #[test]
    fn two_path_with_distinct_weights() {
        let c = ctx(3);
        let i = ideal(&c, &[&[2, 2, 0], &[0, 5, 5]]);
        let d = split_decompose(&i).unwrap();
        let expected = vec![
            comp(&c, &[(0, 2), (1, 5)]),
            comp(&c, &[(0, 2), (2, 5)]),
            comp(&c, &[(1, 2)]),
        ];
        assert_eq!(d.components(), expected.as_slice());
        assert!(d.is_irredundant());
        assert_eq!(d.m_height().unwrap(), 1);
        assert!(!d.is_m_unmixed());
        assert_eq!(d.intersection(), i);
    }

    #[test]
    fn two_path_with_equal_weights() {
        let c = ctx(3);
        let i = ideal(&c, &[&[3, 3, 0], &[0, 3, 3]]);
        let d = split_decompose(&i).unwrap();
        assert_eq!(
            d.components(),
            [comp(&c, &[(0, 3), (2, 3)]), comp(&c, &[(1, 3)])]
        );
    }

    #[test]
    fn zero_ideal_is_its_own_component() {
        let c = ctx(2);
        let d = split_decompose(&MonomialIdeal::zero(c.clone())).unwrap();
        assert_eq!(d.components(), [IrreducibleComponent::zero(c)]);
        assert_eq!(d.m_height().unwrap(), 0);
    }

    #[test]
    fn unit_ideal_is_rejected() {
        let c = ctx(2);
        assert_eq!(
            split_decompose(&MonomialIdeal::unit(c)),
            Err(AlgebraError::UnitIdeal)
        );
    }

    #[test]
    fn principal_ideal_is_unmixed() {
        let c = ctx(1);
        assert!(is_m_unmixed_ideal(&ideal(&c, &[&[3]])).unwrap());
    }

    #[test]
    fn irredundantize_drops_larger_components() {
        let c = ctx(5);
        let small = comp(&c, &[(0, 2), (1, 5), (3, 3)]);
        let big = comp(&c, &[(0, 2), (1, 5), (3, 3), (4, 2)]);
        let d = irredundantize(vec![big, small.clone()]).unwrap();
        assert_eq!(d.components(), std::slice::from_ref(&small));

        let d = irredundantize(vec![small.clone(), small.clone()]).unwrap();
        assert_eq!(d.len(), 1);

        let other = comp(&c, &[(2, 1)]);
        let d = irredundantize(vec![other.clone(), small.clone()]).unwrap();
        assert_eq!(d.components(), [small, other]);
    }

    #[test]
    fn irredundantize_rejects_empty_and_mixed_contexts() {
        assert_eq!(
            irredundantize(vec![]).unwrap_err(),
            AlgebraError::EmptyDecomposition
        );
        let a = comp(&ctx(2), &[(0, 1)]);
        let b = comp(&ctx(3), &[(0, 1)]);
        assert_eq!(
            irredundantize(vec![a, b]).unwrap_err(),
            AlgebraError::ContextMismatch
        );
    }

    #[test]
    fn component_validation() {
        let c = ctx(2);
        assert!(IrreducibleComponent::new(c.clone(), [(2, 1)]).is_err());
        assert!(IrreducibleComponent::new(c.clone(), [(0, 0)]).is_err());
        assert!(IrreducibleComponent::new(c, [(0, 1), (0, 2)]).is_err());
    }

    #[test]
    fn single_component_height() {
        let c = ctx(1);
        let d = irredundantize(vec![comp(&c, &[(0, 1)])]).unwrap();
        assert_eq!(m_height_of(&d).unwrap(), 1);
    }

    #[test]
    fn component_cap_is_enforced() {
        let c = ctx(3);
        let i = ideal(&c, &[&[2, 2, 0], &[0, 5, 5]]);
        let err = SplitDecomposer::with_cap(2).decompose(&i).unwrap_err();
        assert_eq!(err, AlgebraError::ComponentCapExceeded { cap: 2 });
    }

    #[test]
    fn display() {
        let c = ctx(3);
        assert_eq!(comp(&c, &[(0, 2), (2, 1)]).to_string(), "(X1^2, X3)");
        assert_eq!(IrreducibleComponent::zero(c).to_string(), "0");
    }
}
