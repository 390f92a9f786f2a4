//! Finite group engine: materialized Cayley-table groups and a lazy
//! permutation view for symmetric/alternating groups too large to enumerate.

use std::sync::OnceLock;

use crate::error::{Error, Result, ValidationError};
use crate::perm::Perm;

/// Sorted, duplicate-free set of element indices.
#[derive(Clone, PartialEq, Eq, Debug, PartialOrd, Ord, Hash)]
pub struct ElementSet(Vec<usize>);

impl ElementSet {
    pub fn from_vec(mut v: Vec<usize>) -> Self {
        v.sort_unstable();
        v.dedup();
        ElementSet(v)
    }

    pub fn empty() -> Self {
        ElementSet(Vec::new())
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// Materialized finite group over dense indices 0..n-1 with index 0 as the
/// identity. Immutable after construction; centralizers are cached lazily.
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>, // row-major, table[i * order + j] = i * j
    inverses: Vec<u32>,
    labels: Vec<String>,
    spec: String,
    center: OnceLock<ElementSet>,
    centralizers: Vec<OnceLock<ElementSet>>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("spec", &self.spec)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

impl FiniteGroup {
    /// Trusted constructor for built-in families whose laws guarantee the
    /// group axioms. Debug builds still spot-check the identity row.
    pub(crate) fn from_parts(
        order: usize,
        table: Vec<u32>,
        labels: Vec<String>,
        spec: String,
    ) -> Self {
        debug_assert_eq!(table.len(), order * order);
        debug_assert!((0..order).all(|j| table[j] as usize == j));
        let mut inverses = vec![u32::MAX; order];
        for i in 0..order {
            for j in 0..order {
                if table[i * order + j] == 0 {
                    inverses[i] = j as u32;
                }
            }
        }
        let mut centralizers = Vec::with_capacity(order);
        centralizers.resize_with(order, OnceLock::new);
        FiniteGroup {
            order,
            table,
            inverses,
            labels,
            spec,
            center: OnceLock::new(),
            centralizers,
        }
    }

    /// Validating constructor for imported tables. Re-indexes so the
    /// identity lands at index 0. Associativity is checked exhaustively up
    /// to order 512; `assoc_checked` reports whether the check ran.
    pub fn from_table(
        order: usize,
        table: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
        spec: String,
    ) -> Result<(Self, bool)> {
        if order == 0 {
            return Err(ValidationError::EmptyGroup.into());
        }
        if table.len() != order {
            return Err(ValidationError::BadRowCount {
                rows: table.len(),
                order,
            }
            .into());
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != order {
                return Err(ValidationError::BadColCount {
                    row,
                    cols: r.len(),
                    order,
                }
                .into());
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= order {
                    return Err(ValidationError::EntryOutOfRange {
                        row,
                        col,
                        value,
                        order,
                    }
                    .into());
                }
            }
        }
        if let Some(l) = &labels {
            if l.len() != order {
                return Err(ValidationError::BadLabelCount {
                    labels: l.len(),
                    order,
                }
                .into());
            }
        }
        // Latin-square rows and columns.
        for row in 0..order {
            let mut seen = vec![false; order];
            for col in 0..order {
                let v = table[row][col];
                if seen[v] {
                    return Err(ValidationError::RowNotPermutation { row, value: v }.into());
                }
                seen[v] = true;
            }
        }
        for col in 0..order {
            let mut seen = vec![false; order];
            for row in 0..order {
                let v = table[row][col];
                if seen[v] {
                    return Err(ValidationError::ColNotPermutation { col, value: v }.into());
                }
                seen[v] = true;
            }
        }
        // Two-sided identity.
        let identity = (0..order)
            .find(|&e| (0..order).all(|j| table[e][j] == j) && (0..order).all(|i| table[i][e] == i))
            .ok_or(ValidationError::NoIdentity)?;
        // Re-index so the identity is element 0, preserving the order of the
        // remaining elements.
        let mut old_of_new: Vec<usize> = Vec::with_capacity(order);
        old_of_new.push(identity);
        old_of_new.extend((0..order).filter(|&i| i != identity));
        let mut new_of_old = vec![0usize; order];
        for (new, &old) in old_of_new.iter().enumerate() {
            new_of_old[old] = new;
        }
        let mut flat = vec![0u32; order * order];
        for i in 0..order {
            for j in 0..order {
                flat[i * order + j] = new_of_old[table[old_of_new[i]][old_of_new[j]]] as u32;
            }
        }
        // Inverses.
        for i in 0..order {
            if !(0..order).any(|j| flat[i * order + j] == 0) {
                return Err(ValidationError::NoInverse {
                    element: old_of_new[i],
                }
                .into());
            }
        }
        // Associativity, exhaustive up to order 512.
        let assoc_checked = order <= 512;
        if assoc_checked {
            for i in 0..order {
                for j in 0..order {
                    let ij = flat[i * order + j] as usize;
                    for k in 0..order {
                        let lhs = flat[ij * order + k] as usize;
                        let jk = flat[j * order + k] as usize;
                        let rhs = flat[i * order + jk] as usize;
                        if lhs != rhs {
                            return Err(ValidationError::NotAssociative {
                                i: old_of_new[i],
                                j: old_of_new[j],
                                k: old_of_new[k],
                                lhs: old_of_new[lhs],
                                rhs: old_of_new[rhs],
                            }
                            .into());
                        }
                    }
                }
            }
        }
        let labels = match labels {
            Some(l) => old_of_new.iter().map(|&o| l[o].clone()).collect(),
            None => (0..order).map(|i| format!("g{}", old_of_new[i])).collect(),
        };
        Ok((Self::from_parts(order, flat, labels, spec), assoc_checked))
    }

    /// Unchecked import used only by the verification harness's
    /// fault-injection path. The table must be square with identity row 0.
    pub fn from_table_unchecked(order: usize, table: Vec<Vec<usize>>, spec: String) -> Self {
        let mut flat = vec![0u32; order * order];
        for i in 0..order {
            for j in 0..order {
                flat[i * order + j] = table[i][j] as u32;
            }
        }
        let labels = (0..order).map(|i| format!("g{i}")).collect();
        Self::from_parts(order, flat, labels, spec)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn spec_text(&self) -> &str {
        &self.spec
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    fn check(&self, i: usize) -> Result<()> {
        if i < self.order {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                index: i,
                order: self.order,
            })
        }
    }

    #[inline]
    pub(crate) fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order + j] as usize
    }

    #[inline]
    pub(crate) fn inv(&self, i: usize) -> usize {
        self.inverses[i] as usize
    }

    pub fn multiply(&self, i: usize, j: usize) -> Result<usize> {
        self.check(i)?;
        self.check(j)?;
        Ok(self.mul(i, j))
    }

    pub fn inverse(&self, i: usize) -> Result<usize> {
        self.check(i)?;
        Ok(self.inv(i))
    }

    /// [x, y] = x y x^-1 y^-1; identity iff x and y commute.
    pub fn commutator(&self, x: usize, y: usize) -> Result<usize> {
        self.check(x)?;
        self.check(y)?;
        let xy = self.mul(x, y);
        let xyxi = self.mul(xy, self.inv(x));
        Ok(self.mul(xyxi, self.inv(y)))
    }

    #[inline]
    pub(crate) fn commutes(&self, x: usize, y: usize) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn center(&self) -> &ElementSet {
        self.center.get_or_init(|| {
            ElementSet::from_vec(
                (0..self.order)
                    .filter(|&z| (0..self.order).all(|x| self.commutes(z, x)))
                    .collect(),
            )
        })
    }

    pub fn centralizer(&self, a: usize) -> Result<&ElementSet> {
        self.check(a)?;
        Ok(self.centralizers[a].get_or_init(|| {
            ElementSet::from_vec(
                (0..self.order)
                    .filter(|&x| self.commutes(x, a))
                    .collect(),
            )
        }))
    }

    pub fn is_abelian(&self) -> bool {
        self.center().len() == self.order
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, i: usize) -> Result<usize> {
        self.check(i)?;
        let mut acc = i;
        let mut n = 1;
        while acc != 0 {
            acc = self.mul(acc, i);
            n += 1;
        }
        Ok(n)
    }

    /// True iff some member's powers exhaust the given subgroup element set.
    pub fn is_cyclic_subset(&self, members: &ElementSet) -> bool {
        members
            .iter()
            .any(|g| self.element_order(g).unwrap() == members.len())
    }

    /// True iff all pairs of members commute.
    pub fn is_abelian_subset(&self, members: &ElementSet) -> bool {
        let s = members.as_slice();
        for (k, &x) in s.iter().enumerate() {
            for &y in &s[k + 1..] {
                if !self.commutes(x, y) {
                    return false;
                }
            }
        }
        true
    }

    /// Closure of a generating set under multiplication and inverses,
    /// returned as parent indices in ascending order (identity first).
    pub fn closure(&self, gens: &ElementSet) -> Result<ElementSet> {
        if gens.is_empty() {
            return Err(Error::BadInput("empty generating set".into()));
        }
        for g in gens.iter() {
            self.check(g)?;
        }
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut work: Vec<usize> = vec![0];
        for g in gens.iter() {
            if !member[g] {
                member[g] = true;
                work.push(g);
            }
        }
        let gen_list: Vec<usize> = gens.iter().collect();
        let mut head = 0;
        while head < work.len() {
            let x = work[head];
            head += 1;
            for &g in &gen_list {
                for y in [self.mul(x, g), self.mul(g, x)] {
                    if !member[y] {
                        member[y] = true;
                        work.push(y);
                    }
                }
                // Inverse closure is implied for finite groups, but adding
                // it keeps the loop correct for imported quasi-tables too.
                let xi = self.inv(x);
                if !member[xi] {
                    member[xi] = true;
                    work.push(xi);
                }
            }
        }
        Ok(ElementSet::from_vec(
            (0..self.order).filter(|&i| member[i]).collect(),
        ))
    }

    /// Materializes the subgroup generated by `gens` as a standalone group,
    /// with a mapping from new indices back to parent indices.
    pub fn generated_subgroup(&self, gens: &ElementSet) -> Result<Subgroup> {
        let members = self.closure(gens)?;
        let parent_indices: Vec<usize> = members.iter().collect();
        let n = parent_indices.len();
        let mut index_of = vec![usize::MAX; self.order];
        for (new, &old) in parent_indices.iter().enumerate() {
            index_of[old] = new;
        }
        let mut table = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = index_of[self.mul(parent_indices[i], parent_indices[j])] as u32;
            }
        }
        let labels = parent_indices
            .iter()
            .map(|&o| self.labels[o].clone())
            .collect();
        let spec = format!("subgroup-of:{}", self.spec);
        Ok(Subgroup {
            group: FiniteGroup::from_parts(n, table, labels, spec),
            parent_indices,
        })
    }
}

/// A generated subgroup re-indexed as a standalone group.
pub struct Subgroup {
    pub group: FiniteGroup,
    /// parent_indices[new] = index in the parent group.
    pub parent_indices: Vec<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PermKind {
    Symmetric,
    Alternating,
}

/// Permutation-native view of S_n / A_n supporting element arithmetic and
/// witness checks without enumerating the group.
#[derive(Clone, Debug)]
pub struct LazyPermGroup {
    degree: usize,
    kind: PermKind,
}

impl LazyPermGroup {
    pub fn new(degree: usize, kind: PermKind) -> Self {
        LazyPermGroup { degree, kind }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn kind(&self) -> PermKind {
        self.kind
    }

    /// n! or n!/2, when it fits in u64.
    pub fn order_u64(&self) -> Option<u64> {
        let mut f: u64 = 1;
        for k in 2..=self.degree as u64 {
            f = f.checked_mul(k)?;
        }
        Some(match self.kind {
            PermKind::Symmetric => f,
            PermKind::Alternating => f.max(2) / 2,
        })
    }

    pub fn check_element(&self, p: &Perm) -> Result<()> {
        if p.degree() != self.degree {
            return Err(Error::MalformedPermutation {
                degree: self.degree,
            });
        }
        if self.kind == PermKind::Alternating && !p.is_even() {
            return Err(Error::ParityViolation);
        }
        Ok(())
    }

    pub fn perm_commutes(&self, p: &Perm, q: &Perm) -> Result<bool> {
        self.check_element(p)?;
        self.check_element(q)?;
        Ok(p.commutes_with(q))
    }
}
