//! Exponent-vector monomials and monomial ideals kept in canonical form.
//!
//! A [`MonomialIdeal`] always stores its minimal generating set sorted in
//! graded order (total degree ascending, then exponent vectors in descending
//! lexicographic order), so structural equality is ideal equality. The
//! coefficient ring is never represented: everything here happens at the
//! level of monomials.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::AlgebraError;

pub type Exponent = u32;

/// Names and count of the variables of a polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableContext {
    names: Vec<String>,
}

impl VariableContext {
    /// `dimension` variables named `X1`..`Xd`.
    pub fn new(dimension: usize) -> Result<Self, AlgebraError> {
        Self::with_names((1..=dimension).map(|i| format!("X{i}")).collect())
    }

    pub fn with_names(names: Vec<String>) -> Result<Self, AlgebraError> {
        if names.is_empty() {
            return Err(AlgebraError::InvalidContext(
                "at least one variable is required".into(),
            ));
        }
        let mut seen = HashSet::with_capacity(names.len());
        for name in &names {
            if name.is_empty() {
                return Err(AlgebraError::InvalidContext("empty variable name".into()));
            }
            if !seen.insert(name.as_str()) {
                return Err(AlgebraError::InvalidContext(format!(
                    "duplicate variable name {name:?}"
                )));
            }
        }
        Ok(Self { names })
    }

    pub fn dimension(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    /// Renders `m` as `X1^2*X2^5`; the monomial 1 renders as `1`.
    pub fn format_monomial(&self, m: &Monomial) -> String {
        let factors: Vec<String> = m
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    self.names[i].clone()
                } else {
                    format!("{}^{}", self.names[i], e)
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }
}

/// `X1^a1 * ... * Xd^ad` stored as the dense vector `(a1, ..., ad)`.
///
/// `Ord` is the canonical generator order: total degree ascending, ties
/// broken by the exponent vectors in descending lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<Exponent>,
}

impl Monomial {
    pub fn new(exponents: Vec<Exponent>) -> Self {
        Self { exponents }
    }

    pub fn one(dimension: usize) -> Self {
        Self {
            exponents: vec![0; dimension],
        }
    }

    /// The pure power `X_index^exponent`.
    pub fn pure_power(
        dimension: usize,
        index: usize,
        exponent: Exponent,
    ) -> Result<Self, AlgebraError> {
        if index >= dimension {
            return Err(AlgebraError::VariableOutOfRange { index, dimension });
        }
        let mut exponents = vec![0; dimension];
        exponents[index] = exponent;
        Ok(Self { exponents })
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.exponents
    }

    pub fn dimension(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// Indices of the variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// `Some((i, e))` when the monomial is `X_i^e` with `e >= 1`.
    pub fn as_pure_power(&self) -> Option<(usize, Exponent)> {
        let mut support = self.support();
        let first = support.next()?;
        if support.next().is_some() {
            return None;
        }
        Some((first, self.exponents[first]))
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    pub fn divides(&self, other: &Monomial) -> Result<bool, AlgebraError> {
        self.check_dimension(other)?;
        Ok(self.divides_unchecked(other))
    }

    /// Componentwise maximum of the exponents.
    pub fn lcm(&self, other: &Monomial) -> Result<Monomial, AlgebraError> {
        self.check_dimension(other)?;
        Ok(self.lcm_unchecked(other))
    }

    /// `red(f)`: every positive exponent flattened to 1.
    pub fn reduced(&self) -> Monomial {
        Monomial {
            exponents: self.exponents.iter().map(|&e| e.min(1)).collect(),
        }
    }

    /// `f^a`: every exponent multiplied by `a`.
    pub fn pow(&self, a: Exponent) -> Result<Monomial, AlgebraError> {
        let exponents = self
            .exponents
            .iter()
            .map(|&e| e.checked_mul(a).ok_or(AlgebraError::ExponentOverflow))
            .collect::<Result<_, _>>()?;
        Ok(Monomial { exponents })
    }

    /// `self / other`, or `None` if `other` does not divide `self`.
    pub fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        if self.dimension() != other.dimension() || !other.divides_unchecked(self) {
            return None;
        }
        Some(Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.dimension(), other.dimension());
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    pub(crate) fn lcm_unchecked(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.dimension(), other.dimension());
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    fn check_dimension(&self, other: &Monomial) -> Result<(), AlgebraError> {
        if self.dimension() != other.dimension() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dimension(),
                found: other.dimension(),
            });
        }
        Ok(())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exponents.cmp(&self.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A monomial ideal given by its canonical minimal generating set.
///
/// The empty generator list is the zero ideal and `[1]` is the unit ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    context: Arc<VariableContext>,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `generators`, discarding every generator
    /// divisible by another and sorting the rest canonically.
    pub fn new(
        context: Arc<VariableContext>,
        generators: impl IntoIterator<Item = Monomial>,
    ) -> Result<Self, AlgebraError> {
        let dimension = context.dimension();
        let mut gens: Vec<Monomial> = generators.into_iter().collect();
        if let Some(bad) = gens.iter().find(|m| m.dimension() != dimension) {
            return Err(AlgebraError::DimensionMismatch {
                expected: dimension,
                found: bad.dimension(),
            });
        }
        gens.sort();
        gens.dedup();
        Ok(Self {
            context,
            generators: minimize_sorted(gens),
        })
    }

    pub fn zero(context: Arc<VariableContext>) -> Self {
        Self {
            context,
            generators: Vec::new(),
        }
    }

    pub fn unit(context: Arc<VariableContext>) -> Self {
        let one = Monomial::one(context.dimension());
        Self {
            context,
            generators: vec![one],
        }
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.context
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    /// Membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool, AlgebraError> {
        if m.dimension() != self.context.dimension() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.context.dimension(),
                found: m.dimension(),
            });
        }
        Ok(self.contains_unchecked(m))
    }

    /// `self ⊆ other`: every generator of `self` is a member of `other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool, AlgebraError> {
        self.check_context(other)?;
        Ok(self.generators.iter().all(|g| other.contains_unchecked(g)))
    }

    /// Ideal equality, decided on canonical forms.
    pub fn same_ideal(&self, other: &MonomialIdeal) -> Result<bool, AlgebraError> {
        self.check_context(other)?;
        Ok(self.generators == other.generators)
    }

    /// `self ∩ other`, generated by pairwise lcms of generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, AlgebraError> {
        self.check_context(other)?;
        let lcms = self
            .generators
            .iter()
            .flat_map(|f| other.generators.iter().map(move |g| f.lcm_unchecked(g)));
        MonomialIdeal::new(self.context.clone(), lcms)
    }

    /// `self + other`.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, AlgebraError> {
        self.check_context(other)?;
        MonomialIdeal::new(
            self.context.clone(),
            self.generators.iter().chain(&other.generators).cloned(),
        )
    }

    /// `self + (m)`.
    pub fn with_generator(&self, m: Monomial) -> Result<MonomialIdeal, AlgebraError> {
        MonomialIdeal::new(
            self.context.clone(),
            self.generators.iter().cloned().chain(std::iter::once(m)),
        )
    }

    /// The monomial radical, generated by `red(f)` over the generators.
    pub fn monomial_radical(&self) -> MonomialIdeal {
        let reduced = self.generators.iter().map(Monomial::reduced);
        MonomialIdeal::new(self.context.clone(), reduced).expect("same context")
    }

    /// `I^[a]`, generated by `f^a` over the minimal generators.
    pub fn bracket_power(&self, a: Exponent) -> Result<MonomialIdeal, AlgebraError> {
        if a < 1 {
            return Err(AlgebraError::InvalidBracketPower);
        }
        let powered = self
            .generators
            .iter()
            .map(|f| f.pow(a))
            .collect::<Result<Vec<_>, _>>()?;
        MonomialIdeal::new(self.context.clone(), powered)
    }

    /// True iff the ideal is generated by pure powers of pairwise distinct
    /// variables. The zero ideal qualifies; the unit ideal does not.
    pub fn is_m_irreducible(&self) -> bool {
        let mut seen = HashSet::new();
        self.generators.iter().all(|g| match g.as_pure_power() {
            Some((i, _)) => seen.insert(i),
            None => false,
        })
    }

    /// Splits every exponent into fresh squarefree variables.
    ///
    /// Variable `X_i` with maximal exponent `m_i` across the generators is
    /// replaced by `X_i_1, ..., X_i_{m_i}`, and a factor `X_i^e` becomes
    /// `X_i_1 * ... * X_i_e`. The zero and unit ideals (which have no
    /// variables to split) are returned unchanged with the identity
    /// substitution.
    pub fn polarize(&self) -> Polarization {
        let dimension = self.context.dimension();
        let max_exponents: Vec<Exponent> = (0..dimension)
            .map(|i| {
                self.generators
                    .iter()
                    .map(|g| g.exponents[i])
                    .max()
                    .unwrap_or(0)
            })
            .collect();

        if max_exponents.iter().all(|&e| e == 0) {
            return Polarization {
                source: self.context.clone(),
                context: self.context.clone(),
                ideal: self.clone(),
                substitution: (0..dimension).collect(),
            };
        }

        let mut names = Vec::new();
        let mut substitution = Vec::new();
        let mut offsets = vec![0usize; dimension];
        for (i, &m) in max_exponents.iter().enumerate() {
            offsets[i] = names.len();
            for j in 1..=m {
                names.push(format!("{}_{}", self.context.name(i), j));
                substitution.push(i);
            }
        }
        let context =
            Arc::new(VariableContext::with_names(names).expect("polarized names are distinct"));
        let width = context.dimension();
        let generators = self.generators.iter().map(|g| {
            let mut exponents = vec![0; width];
            for (i, &e) in g.exponents.iter().enumerate() {
                for slot in &mut exponents[offsets[i]..offsets[i] + e as usize] {
                    *slot = 1;
                }
            }
            Monomial::new(exponents)
        });
        let ideal = MonomialIdeal::new(context.clone(), generators).expect("same context");
        Polarization {
            source: self.context.clone(),
            context,
            ideal,
            substitution,
        }
    }

    pub(crate) fn contains_unchecked(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides_unchecked(m))
    }

    fn check_context(&self, other: &MonomialIdeal) -> Result<(), AlgebraError> {
        if self.context != other.context {
            return Err(AlgebraError::ContextMismatch);
        }
        Ok(())
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|g| self.context.format_monomial(g))
            .collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// The result of [`MonomialIdeal::polarize`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polarization {
    source: Arc<VariableContext>,
    context: Arc<VariableContext>,
    ideal: MonomialIdeal,
    substitution: Vec<usize>,
}

impl Polarization {
    pub fn source_context(&self) -> &Arc<VariableContext> {
        &self.source
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.context
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    /// `substitution()[k]` is the source variable that polarized variable
    /// `k` maps back to.
    pub fn substitution(&self) -> &[usize] {
        &self.substitution
    }

    /// Applies the substitution to every generator and canonicalizes.
    pub fn depolarize(&self) -> MonomialIdeal {
        let dimension = self.source.dimension();
        let generators = self.ideal.generators().iter().map(|g| {
            let mut exponents = vec![0; dimension];
            for (k, &e) in g.exponents().iter().enumerate() {
                exponents[self.substitution[k]] += e;
            }
            Monomial::new(exponents)
        });
        MonomialIdeal::new(self.source.clone(), generators).expect("source context")
    }
}

/// Drops every generator divisible by an earlier one. `gens` must be sorted
/// canonically and deduplicated, so any proper divisor precedes its multiple.
fn minimize_sorted(gens: Vec<Monomial>) -> Vec<Monomial> {
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !kept.iter().any(|k| k.divides_unchecked(&m)) {
            kept.push(m);
        }
    }
    kept
}
