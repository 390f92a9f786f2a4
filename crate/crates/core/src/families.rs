//! Built-in group families, direct products, and the compact group-spec
//! grammar: `spec := term ("x" term)*`, `term := FAMILY ":" INTEGER`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, LazyPermGroup, PermKind};
use crate::perm::Perm;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Family {
    Symmetric,
    Alternating,
    Dihedral,
    Quaternion,
    Cyclic,
    Heisenberg,
}

impl Family {
    pub fn tag(self) -> char {
        match self {
            Family::Symmetric => 'S',
            Family::Alternating => 'A',
            Family::Dihedral => 'D',
            Family::Quaternion => 'Q',
            Family::Cyclic => 'C',
            Family::Heisenberg => 'H',
        }
    }

    fn from_tag(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'S' => Some(Family::Symmetric),
            'A' => Some(Family::Alternating),
            'D' => Some(Family::Dihedral),
            'Q' => Some(Family::Quaternion),
            'C' => Some(Family::Cyclic),
            'H' => Some(Family::Heisenberg),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FamilyTerm {
    pub family: Family,
    pub param: u64,
}

impl FamilyTerm {
    /// Group order of this term; None if it overflows u64.
    pub fn order(&self) -> Option<u64> {
        match self.family {
            Family::Cyclic => Some(self.param),
            Family::Dihedral => Some(2 * self.param),
            Family::Quaternion => Some(self.param),
            Family::Heisenberg => self.param.checked_pow(3),
            Family::Symmetric => factorial(self.param),
            Family::Alternating => factorial(self.param).map(|f| f.max(2) / 2),
        }
    }
}

fn factorial(n: u64) -> Option<u64> {
    let mut f: u64 = 1;
    for k in 2..=n {
        f = f.checked_mul(k)?;
    }
    Some(f)
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Parsed group specification: one or more family terms combined by direct
/// product (left-associated).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupSpec {
    pub terms: Vec<FamilyTerm>,
    pub source: String,
}

impl GroupSpec {
    /// Canonical rendering: uppercase tags, no spaces, lowercase "x".
    pub fn render(&self) -> String {
        self.terms
            .iter()
            .map(|t| format!("{}:{}", t.family.tag(), t.param))
            .collect::<Vec<_>>()
            .join("x")
    }

    pub fn order(&self) -> Option<u64> {
        self.terms
            .iter()
            .try_fold(1u64, |acc, t| acc.checked_mul(t.order()?))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

pub fn parse_spec(text: &str) -> Result<GroupSpec> {
    let chars: Vec<(usize, char)> = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    let mut pos = 0usize;
    let mut terms = Vec::new();
    loop {
        // Family tag.
        let (at, c) = *chars.get(pos).ok_or_else(|| Error::SyntaxError {
            position: text.len(),
            expected: "family tag (S|A|D|Q|C|H)".into(),
        })?;
        let family = Family::from_tag(c).ok_or_else(|| Error::SyntaxError {
            position: at,
            expected: "family tag (S|A|D|Q|C|H)".into(),
        })?;
        pos += 1;
        // Colon.
        match chars.get(pos) {
            Some(&(_, ':')) => pos += 1,
            other => {
                return Err(Error::SyntaxError {
                    position: other.map_or(text.len(), |&(i, _)| i),
                    expected: "':'".into(),
                })
            }
        }
        // Integer.
        let start = pos;
        let mut value: u64 = 0;
        while let Some(&(_, c)) = chars.get(pos) {
            if let Some(d) = c.to_digit(10) {
                value = value
                    .checked_mul(10)
                    .and_then(|v| v.checked_add(d as u64))
                    .ok_or_else(|| Error::ParameterError {
                        family: family.tag(),
                        reason: "parameter overflows u64".into(),
                    })?;
                pos += 1;
            } else {
                break;
            }
        }
        if pos == start {
            return Err(Error::SyntaxError {
                position: chars.get(pos).map_or(text.len(), |&(i, _)| i),
                expected: "integer parameter".into(),
            });
        }
        check_param(family, value)?;
        terms.push(FamilyTerm {
            family,
            param: value,
        });
        // Separator or end.
        match chars.get(pos) {
            None => break,
            Some(&(_, c)) if c.eq_ignore_ascii_case(&'x') => pos += 1,
            Some(&(i, _)) => {
                return Err(Error::SyntaxError {
                    position: i,
                    expected: "'x' separator or end of spec".into(),
                })
            }
        }
    }
    Ok(GroupSpec {
        terms,
        source: text.to_string(),
    })
}

fn check_param(family: Family, p: u64) -> Result<()> {
    let fail = |reason: &str| {
        Err(Error::ParameterError {
            family: family.tag(),
            reason: reason.into(),
        })
    };
    match family {
        Family::Cyclic | Family::Dihedral | Family::Symmetric | Family::Alternating => {
            if p < 1 {
                return fail("parameter must be >= 1");
            }
        }
        Family::Quaternion => {
            if p % 4 != 0 || p < 8 {
                return fail("order must be divisible by 4 and >= 8");
            }
        }
        Family::Heisenberg => {
            if !is_prime(p) {
                return fail("parameter must be prime");
            }
        }
    }
    Ok(())
}

/// Result of building a spec: either a materialized Cayley-table group or a
/// lazy permutation view (single S/A terms above the cap).
pub enum BuiltGroup {
    Table(FiniteGroup),
    Lazy(LazyPermGroup),
}

impl BuiltGroup {
    pub fn as_table(&self) -> Option<&FiniteGroup> {
        match self {
            BuiltGroup::Table(g) => Some(g),
            BuiltGroup::Lazy(_) => None,
        }
    }
}

pub fn build(spec: &GroupSpec, cap: u64) -> Result<BuiltGroup> {
    // Single symmetric/alternating terms above the cap stay lazy.
    if spec.terms.len() == 1 {
        let t = spec.terms[0];
        if matches!(t.family, Family::Symmetric | Family::Alternating) {
            let over_cap = t.order().map_or(true, |o| o > cap);
            if over_cap {
                let kind = if t.family == Family::Symmetric {
                    PermKind::Symmetric
                } else {
                    PermKind::Alternating
                };
                return Ok(BuiltGroup::Lazy(LazyPermGroup::new(t.param as usize, kind)));
            }
        }
    } else {
        for t in &spec.terms {
            if matches!(t.family, Family::Symmetric | Family::Alternating)
                && t.order().map_or(true, |o| o > cap)
            {
                return Err(Error::ProductOfLazy);
            }
        }
    }
    let order = spec.order().ok_or(Error::CapExceeded {
        order: u64::MAX,
        cap,
    })?;
    if order > cap {
        return Err(Error::CapExceeded { order, cap });
    }
    let mut groups = spec.terms.iter().map(build_term);
    let first = groups.next().expect("parser guarantees >= 1 term");
    // Factor specs are canonical, so the folded product spec equals render().
    let product = groups.fold(first, |acc, g| direct_product(&acc, &g));
    Ok(BuiltGroup::Table(product))
}

fn build_term(t: &FamilyTerm) -> FiniteGroup {
    let spec = format!("{}:{}", t.family.tag(), t.param);
    match t.family {
        Family::Cyclic => build_cyclic(t.param as usize, spec),
        Family::Dihedral => build_dihedral(t.param as usize, spec),
        Family::Quaternion => build_quaternion(t.param as usize, spec),
        Family::Heisenberg => build_heisenberg(t.param as usize, spec),
        Family::Symmetric => build_perm_group(t.param as usize, false, spec),
        Family::Alternating => build_perm_group(t.param as usize, true, spec),
    }
}

fn build_cyclic(m: usize, spec: String) -> FiniteGroup {
    let mut table = vec![0u32; m * m];
    for i in 0..m {
        for j in 0..m {
            table[i * m + j] = ((i + j) % m) as u32;
        }
    }
    let labels = (0..m)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    FiniteGroup::from_parts(m, table, labels, spec)
}

/// D_2n as pairs (i, eps) with index i + n*eps; (i,0) = b^i, (i,1) = b^i a.
fn build_dihedral(n: usize, spec: String) -> FiniteGroup {
    let order = 2 * n;
    let idx = |i: usize, e: usize| i + n * e;
    let mut table = vec![0u32; order * order];
    for i in 0..n {
        for j in 0..n {
            for e in 0..2 {
                // (i,0)(j,e) = (i+j, e)
                table[idx(i, 0) * order + idx(j, e)] = idx((i + j) % n, e) as u32;
                // (i,1)(j,e) = (i-j, 1-e)
                table[idx(i, 1) * order + idx(j, e)] = idx((i + n - j) % n, 1 - e) as u32;
            }
        }
    }
    let labels = (0..order)
        .map(|k| {
            let (i, e) = (k % n, k / n);
            match (i, e) {
                (0, 0) => "1".to_string(),
                (1, 0) => "b".to_string(),
                (_, 0) => format!("b^{i}"),
                (0, 1) => "a".to_string(),
                (1, 1) => "ba".to_string(),
                _ => format!("b^{i}a"),
            }
        })
        .collect();
    FiniteGroup::from_parts(order, table, labels, spec)
}

/// Q_4n (m = 4n) as pairs (i, eps), i mod 2n, index i + 2n*eps;
/// (i,0) = x^i, (i,1) = x^i y.
fn build_quaternion(m: usize, spec: String) -> FiniteGroup {
    let half = m / 2; // 2n
    let n = m / 4;
    let idx = |i: usize, e: usize| i + half * e;
    let mut table = vec![0u32; m * m];
    for i in 0..half {
        for j in 0..half {
            // (i,0)(j,e) = (i+j, e)
            for e in 0..2 {
                table[idx(i, 0) * m + idx(j, e)] = idx((i + j) % half, e) as u32;
            }
            // (i,1)(j,0) = (i-j, 1)
            table[idx(i, 1) * m + idx(j, 0)] = idx((i + half - j) % half, 1) as u32;
            // (i,1)(j,1) = (i-j+n, 0)
            table[idx(i, 1) * m + idx(j, 1)] = idx((i + half - j + n) % half, 0) as u32;
        }
    }
    let labels = (0..m)
        .map(|k| {
            let (i, e) = (k % half, k / half);
            match (i, e) {
                (0, 0) => "1".to_string(),
                (1, 0) => "x".to_string(),
                (_, 0) => format!("x^{i}"),
                (0, 1) => "y".to_string(),
                (1, 1) => "xy".to_string(),
                _ => format!("x^{i}y"),
            }
        })
        .collect();
    FiniteGroup::from_parts(m, table, labels, spec)
}

/// Mod-p Heisenberg group: triples (a,b,c) with
/// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b'), index a*p^2 + b*p + c.
fn build_heisenberg(p: usize, spec: String) -> FiniteGroup {
    let order = p * p * p;
    let idx = |a: usize, b: usize, c: usize| a * p * p + b * p + c;
    let mut table = vec![0u32; order * order];
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for a2 in 0..p {
                    for b2 in 0..p {
                        for c2 in 0..p {
                            let prod = idx((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
                            table[idx(a, b, c) * order + idx(a2, b2, c2)] = prod as u32;
                        }
                    }
                }
            }
        }
    }
    let labels = (0..order)
        .map(|k| {
            let (a, b, c) = (k / (p * p), k / p % p, k % p);
            format!("({a},{b},{c})")
        })
        .collect();
    FiniteGroup::from_parts(order, table, labels, spec)
}

fn build_perm_group(degree: usize, alternating_only: bool, spec: String) -> FiniteGroup {
    let mut perms: Vec<Perm> = Vec::new();
    let mut images: Vec<usize> = (0..degree).collect();
    permute_all(&mut images, 0, &mut |imgs| {
        let p = Perm::from_images(imgs.to_vec()).unwrap();
        if !alternating_only || p.is_even() {
            perms.push(p);
        }
    });
    // Lexicographic order puts the identity image array first.
    perms.sort();
    let index_of: HashMap<Perm, usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let n = perms.len();
    let mut table = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = index_of[&perms[i].compose(&perms[j])] as u32;
        }
    }
    let labels = perms.iter().map(|p| p.to_string()).collect();
    FiniteGroup::from_parts(n, table, labels, spec)
}

fn permute_all(images: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == images.len() {
        visit(images);
        return;
    }
    for i in k..images.len() {
        images.swap(k, i);
        permute_all(images, k + 1, visit);
        images.swap(k, i);
    }
}

fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut table = vec![0u32; n * n];
    for i1 in 0..na {
        for i2 in 0..nb {
            let i = i1 * nb + i2;
            for j1 in 0..na {
                for j2 in 0..nb {
                    let j = j1 * nb + j2;
                    let p = a.multiply(i1, j1).unwrap() * nb + b.multiply(i2, j2).unwrap();
                    table[i * n + j] = p as u32;
                }
            }
        }
    }
    let labels = (0..n)
        .map(|k| format!("{},{}", a.label(k / nb), b.label(k % nb)))
        .collect();
    let spec = format!("{}x{}", a.spec_text(), b.spec_text());
    FiniteGroup::from_parts(n, table, labels, spec)
}

pub struct FamilyInfo {
    pub tag: char,
    pub constraints: &'static str,
    pub description: &'static str,
}

/// Static family metadata driving CLI help and batch sweeps.
pub fn family_catalog() -> Vec<FamilyInfo> {
    vec![
        FamilyInfo {
            tag: 'S',
            constraints: "degree >= 1",
            description: "symmetric group S_n of degree n (order n!)",
        },
        FamilyInfo {
            tag: 'A',
            constraints: "degree >= 1",
            description: "alternating group A_n of degree n (order n!/2)",
        },
        FamilyInfo {
            tag: 'D',
            constraints: "n >= 1",
            description: "dihedral group D_2n of ORDER 2n (D:6 has 12 elements)",
        },
        FamilyInfo {
            tag: 'Q',
            constraints: "order \u{2261} 0 mod 4, >= 8",
            description: "generalized quaternion group of order m",
        },
        FamilyInfo {
            tag: 'C',
            constraints: "m >= 1",
            description: "cyclic group of order m",
        },
        FamilyInfo {
            tag: 'H',
            constraints: "parameter prime",
            description: "Heisenberg group of order p^3 (mod-p unitriangular)",
        },
    ]
}
