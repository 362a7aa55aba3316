//! Finite groups as explicit Cayley tables, built from named families.
//!
//! Every group stores its full multiplication table, so all queries are
//! table lookups. Element `0` is always the identity.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("InvalidFamilyParameters: {0}")]
    InvalidFamilyParameters(String),
    #[error("InvalidCayleyTable: {0}")]
    InvalidCayleyTable(String),
    #[error("ElementOutOfRange: element {element} in a group of order {order}")]
    ElementOutOfRange { element: usize, order: usize },
}

/// A named group family with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum GroupFamilySpec {
    /// `Z_n`.
    Cyclic { n: u64 },
    /// `El(p^n)`.
    ElementaryAbelian { p: u64, n: u32 },
    /// `D_{2n}`, order `2n`.
    Dihedral { n: u64 },
    /// `Dic_{4n}`, order `4n`.
    Dicyclic { n: u64 },
    /// The non-abelian group of order `pq`.
    Gpq { p: u64, q: u64 },
    DirectProduct { left: Box<GroupFamilySpec>, right: Box<GroupFamilySpec> },
}

impl GroupFamilySpec {
    pub fn product(left: GroupFamilySpec, right: GroupFamilySpec) -> Self {
        GroupFamilySpec::DirectProduct { left: Box::new(left), right: Box::new(right) }
    }

    /// `El(p^n) × El(q^m)`.
    pub fn elab_product(p: u64, n: u32, q: u64, m: u32) -> Self {
        Self::product(
            GroupFamilySpec::ElementaryAbelian { p, n },
            GroupFamilySpec::ElementaryAbelian { p: q, n: m },
        )
    }

    /// `El(p^n) × Z_m`.
    pub fn elab_times_cyclic(p: u64, n: u32, m: u64) -> Self {
        Self::product(GroupFamilySpec::ElementaryAbelian { p, n }, GroupFamilySpec::Cyclic { n: m })
    }

    /// Checks the family's parameter constraints.
    pub fn validate(&self) -> Result<(), GroupError> {
        let bad = |msg: String| Err(GroupError::InvalidFamilyParameters(msg));
        match *self {
            GroupFamilySpec::Cyclic { n } if n == 0 => bad("cyclic group needs n >= 1".into()),
            GroupFamilySpec::ElementaryAbelian { p, n } => {
                if !is_prime(p) {
                    bad(format!("elementary abelian group needs p prime, got p = {p}"))
                } else if n == 0 {
                    bad("elementary abelian group needs n >= 1".into())
                } else if p.checked_pow(n).is_none() {
                    bad(format!("{p}^{n} overflows"))
                } else {
                    Ok(())
                }
            }
            GroupFamilySpec::Dihedral { n } if n < 3 => {
                bad(format!("dihedral group D_2n needs n >= 3, got n = {n}"))
            }
            GroupFamilySpec::Dicyclic { n } if n < 3 => {
                bad(format!("dicyclic group Dic_4n needs n >= 3, got n = {n}"))
            }
            GroupFamilySpec::Gpq { p, q } => {
                if !is_prime(p) || !is_prime(q) {
                    bad(format!("G_pq needs p and q prime, got p = {p}, q = {q}"))
                } else if p >= q {
                    bad(format!("G_pq needs p < q, got p = {p}, q = {q}"))
                } else if (q - 1) % p != 0 {
                    bad(format!("G_pq needs p | q - 1, got p = {p}, q = {q}"))
                } else {
                    Ok(())
                }
            }
            GroupFamilySpec::DirectProduct { ref left, ref right } => {
                left.validate()?;
                right.validate()
            }
            _ => Ok(()),
        }
    }

    /// Group order, without building the group. Saturates on overflow.
    pub fn order(&self) -> u64 {
        match self {
            GroupFamilySpec::Cyclic { n } => *n,
            GroupFamilySpec::ElementaryAbelian { p, n } => p.saturating_pow(*n),
            GroupFamilySpec::Dihedral { n } => n.saturating_mul(2),
            GroupFamilySpec::Dicyclic { n } => n.saturating_mul(4),
            GroupFamilySpec::Gpq { p, q } => p.saturating_mul(*q),
            GroupFamilySpec::DirectProduct { left, right } => left.order().saturating_mul(right.order()),
        }
    }
}

impl fmt::Display for GroupFamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupFamilySpec::Cyclic { n } => write!(f, "cyclic:{n}"),
            GroupFamilySpec::ElementaryAbelian { p, n } => write!(f, "elab:{p}:{n}"),
            GroupFamilySpec::Dihedral { n } => write!(f, "dihedral:{n}"),
            GroupFamilySpec::Dicyclic { n } => write!(f, "dicyclic:{n}"),
            GroupFamilySpec::Gpq { p, q } => write!(f, "gpq:{p}:{q}"),
            GroupFamilySpec::DirectProduct { left, right } => write!(f, "{left}*{right}"),
        }
    }
}

/// Parses the compact form printed by `Display`: `cyclic:6`, `elab:2:3`,
/// `dihedral:4`, `dicyclic:3`, `gpq:2:3`, with `*` for direct products
/// (left-associative).
impl FromStr for GroupFamilySpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, GroupError> {
        let bad = || GroupError::InvalidFamilyParameters(format!("cannot parse group spec {s:?}"));
        let mut parts = s.split('*').map(str::trim);
        let first = parts.next().ok_or_else(bad)?;
        let mut acc = parse_atom(first).ok_or_else(bad)?;
        for part in parts {
            acc = GroupFamilySpec::product(acc, parse_atom(part).ok_or_else(bad)?);
        }
        acc.validate()?;
        Ok(acc)
    }
}

fn parse_atom(s: &str) -> Option<GroupFamilySpec> {
    let fields: Vec<&str> = s.split(':').collect();
    let num = |i: usize| fields.get(i)?.parse::<u64>().ok();
    let spec = match (fields[0], fields.len()) {
        ("cyclic", 2) => GroupFamilySpec::Cyclic { n: num(1)? },
        ("elab", 3) => GroupFamilySpec::ElementaryAbelian { p: num(1)?, n: u32::try_from(num(2)?).ok()? },
        ("dihedral", 2) => GroupFamilySpec::Dihedral { n: num(1)? },
        ("dicyclic", 2) => GroupFamilySpec::Dicyclic { n: num(1)? },
        ("gpq", 3) => GroupFamilySpec::Gpq { p: num(1)?, q: num(2)? },
        _ => return None,
    };
    Some(spec)
}

/// A finite group given by its Cayley table.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    /// Row-major `order × order` table; entry `g·order + h` is `g·h`.
    table: Vec<u32>,
    inverse: Vec<u32>,
    labels: Option<Vec<String>>,
    family: Option<GroupFamilySpec>,
}

pub type Element = usize;

impl FiniteGroup {
    /// Builds a group from a full table, checking every group axiom.
    /// Element 0 must be the identity.
    pub fn from_table(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self, GroupError> {
        let order = table.len();
        let invalid = |m: String| Err(GroupError::InvalidCayleyTable(m));
        if order == 0 {
            return invalid("empty table".into());
        }
        if table.iter().any(|r| r.len() != order) {
            return invalid("table is not square".into());
        }
        if table.iter().flatten().any(|&v| v >= order) {
            return invalid("table entry out of range".into());
        }
        if let Some(l) = &labels {
            if l.len() != order {
                return invalid(format!("{} labels for {order} elements", l.len()));
            }
        }
        let flat: Vec<u32> = table.iter().flatten().map(|&v| v as u32).collect();
        let mut g = FiniteGroup { order, table: flat, inverse: Vec::new(), labels, family: None };
        g.fill_inverses()?;
        g.check_axioms()?;
        Ok(g)
    }

    fn from_fn(
        order: usize,
        labels: Vec<String>,
        family: Option<GroupFamilySpec>,
        op: impl Fn(usize, usize) -> usize,
    ) -> Self {
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                table.push(op(a, b) as u32);
            }
        }
        let mut g = FiniteGroup { order, table, inverse: Vec::new(), labels: Some(labels), family };
        g.fill_inverses().expect("family construction yields a group");
        g
    }

    fn fill_inverses(&mut self) -> Result<(), GroupError> {
        let n = self.order;
        let mut inverse = vec![u32::MAX; n];
        for a in 0..n {
            if let Some(b) = (0..n).find(|&b| self.table[a * n + b] == 0) {
                inverse[a] = b as u32;
            } else {
                return Err(GroupError::InvalidCayleyTable(format!("element {a} has no inverse")));
            }
        }
        self.inverse = inverse;
        Ok(())
    }

    /// Identity, inverse, and associativity laws by full scan. `O(n³)`.
    pub fn check_axioms(&self) -> Result<(), GroupError> {
        let n = self.order;
        for g in 0..n {
            if self.mul(0, g) != g || self.mul(g, 0) != g {
                return Err(GroupError::InvalidCayleyTable(format!("0 is not an identity for {g}")));
            }
            let inv = self.inverse[g] as usize;
            if self.mul(g, inv) != 0 || self.mul(inv, g) != 0 {
                return Err(GroupError::InvalidCayleyTable(format!("bad inverse for {g}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(GroupError::InvalidCayleyTable(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Element {
        0
    }

    /// The family this group was built from, if any.
    pub fn family(&self) -> Option<&GroupFamilySpec> {
        self.family.as_ref()
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.table[a * self.order + b] as usize
    }

    pub fn inverse(&self, a: Element) -> Element {
        self.inverse[a] as usize
    }

    pub fn label(&self, a: Element) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.order).map(|a| self.label(a)).collect()
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }

    pub fn pow(&self, a: Element, k: u64) -> Element {
        let mut acc = 0;
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Least `k ≥ 1` with `a^k = e`.
    pub fn element_order(&self, a: Element) -> Result<usize, GroupError> {
        self.check_element(a)?;
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        Ok(k)
    }

    fn check_element(&self, a: Element) -> Result<(), GroupError> {
        if a >= self.order {
            return Err(GroupError::ElementOutOfRange { element: a, order: self.order });
        }
        Ok(())
    }

    /// Elements of `⟨a⟩` in generation order `e, a, a², …`.
    pub fn cyclic_subgroup(&self, a: Element) -> Vec<Element> {
        let mut out = vec![0];
        let mut x = a;
        while x != 0 {
            out.push(x);
            x = self.mul(x, a);
        }
        out
    }

    /// The distinct cyclic subgroups `{⟨c⟩ : c ∈ G}`, each as an ascending
    /// element list, ordered lexicographically.
    pub fn cyclic_subgroups(&self) -> Vec<Vec<Element>> {
        let mut seen = BTreeSet::new();
        for a in 0..self.order {
            let mut s = self.cyclic_subgroup(a);
            s.sort_unstable();
            seen.insert(s);
        }
        seen.into_iter().collect()
    }

    /// Count of elements of each order, indexed by order.
    pub fn order_census(&self) -> Vec<usize> {
        let mut census = vec![0; self.order + 1];
        for a in 0..self.order {
            census[self.element_order(a).expect("in range")] += 1;
        }
        census
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("family", &self.family)
            .finish_non_exhaustive()
    }
}

#[derive(Serialize, Deserialize)]
struct GroupRepr {
    order: usize,
    identity: usize,
    table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl FiniteGroup {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(GroupRepr {
            order: self.order,
            identity: 0,
            table: self.table_rows(),
            labels: self.labels.clone(),
        })
        .expect("group serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, GroupError> {
        let repr: GroupRepr = serde_json::from_value(value.clone())
            .map_err(|e| GroupError::InvalidCayleyTable(e.to_string()))?;
        if repr.identity != 0 {
            return Err(GroupError::InvalidCayleyTable("identity must be element 0".into()));
        }
        if repr.order != repr.table.len() {
            return Err(GroupError::InvalidCayleyTable("order does not match table".into()));
        }
        Self::from_table(repr.table, repr.labels)
    }
}

/// Builds the group named by `spec`.
pub fn make_group(spec: &GroupFamilySpec) -> Result<FiniteGroup, GroupError> {
    spec.validate()?;
    let g = match *spec {
        GroupFamilySpec::Cyclic { n } => cyclic(n as usize),
        GroupFamilySpec::ElementaryAbelian { p, n } => elementary_abelian(p as usize, n),
        GroupFamilySpec::Dihedral { n } => dihedral(n as usize),
        GroupFamilySpec::Dicyclic { n } => dicyclic(n as usize),
        GroupFamilySpec::Gpq { p, q } => gpq(p as usize, q as usize),
        GroupFamilySpec::DirectProduct { ref left, ref right } => {
            direct_product(&make_group(left)?, &make_group(right)?)
        }
    };
    Ok(g)
}

fn power_label(base: &str, i: usize) -> String {
    match i {
        0 => "e".into(),
        1 => base.into(),
        _ => format!("{base}^{i}"),
    }
}

fn cyclic(n: usize) -> FiniteGroup {
    let labels = (0..n).map(|i| power_label("a", i)).collect();
    FiniteGroup::from_fn(n, labels, Some(GroupFamilySpec::Cyclic { n: n as u64 }), |a, b| (a + b) % n)
}

/// Vectors over `F_p` of length `n`; index `Σ c_k p^(n-1-k)`, so the first
/// coordinate is most significant.
fn elementary_abelian(p: usize, n: u32) -> FiniteGroup {
    let order = p.pow(n);
    let digits = |mut x: usize| {
        let mut d = vec![0; n as usize];
        for k in (0..n as usize).rev() {
            d[k] = x % p;
            x /= p;
        }
        d
    };
    let labels = (0..order)
        .map(|x| {
            let d: Vec<String> = digits(x).iter().map(ToString::to_string).collect();
            format!("({})", d.join(","))
        })
        .collect();
    let spec = GroupFamilySpec::ElementaryAbelian { p: p as u64, n };
    FiniteGroup::from_fn(order, labels, Some(spec), |mut a, mut b| {
        let (mut out, mut place) = (0, 1);
        for _ in 0..n {
            out += (a % p + b % p) % p * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    })
}

/// `a^i b^ε` at index `ε·n + i`; `b a^j = a^{-j} b`.
fn dihedral(n: usize) -> FiniteGroup {
    let labels = (0..2 * n)
        .map(|x| {
            let (i, eps) = (x % n, x / n);
            match (i, eps) {
                (_, 0) => power_label("a", i),
                (0, _) => "b".into(),
                _ => format!("{}b", power_label("a", i)),
            }
        })
        .collect();
    FiniteGroup::from_fn(2 * n, labels, Some(GroupFamilySpec::Dihedral { n: n as u64 }), |x, y| {
        let (i, e1, j, e2) = (x % n, x / n, y % n, y / n);
        let rot = if e1 == 0 { (i + j) % n } else { (i + n - j) % n };
        ((e1 + e2) % 2) * n + rot
    })
}

/// `a^i x^ε` at index `ε·2n + i`; `x a^j = a^{-j} x` and `x² = aⁿ`.
fn dicyclic(n: usize) -> FiniteGroup {
    let m = 2 * n;
    let labels = (0..2 * m)
        .map(|v| {
            let (i, eps) = (v % m, v / m);
            match (i, eps) {
                (_, 0) => power_label("a", i),
                (0, _) => "x".into(),
                _ => format!("{}x", power_label("a", i)),
            }
        })
        .collect();
    FiniteGroup::from_fn(2 * m, labels, Some(GroupFamilySpec::Dicyclic { n: n as u64 }), |u, v| {
        let (i, e1, j, e2) = (u % m, u / m, v % m, v / m);
        let mut rot = if e1 == 0 { (i + j) % m } else { (i + m - j) % m };
        if e1 == 1 && e2 == 1 {
            rot = (rot + n) % m;
        }
        ((e1 + e2) % 2) * m + rot
    })
}

/// Least `r > 1` with `r^p ≡ 1 (mod q)`.
pub fn gpq_twist(p: u64, q: u64) -> u64 {
    (2..q)
        .find(|&r| (0..p).fold(1u64, |acc, _| acc * r % q) == 1)
        .expect("p | q - 1 guarantees a primitive p-th root of unity")
}

/// `(i mod q, j mod p)` at index `j·q + i`, with
/// `(i₁,j₁)(i₂,j₂) = (i₁ + r^{j₁} i₂, j₁ + j₂)`.
fn gpq(p: usize, q: usize) -> FiniteGroup {
    let r = gpq_twist(p as u64, q as u64) as usize;
    let mut rpow = vec![1usize; p];
    for j in 1..p {
        rpow[j] = rpow[j - 1] * r % q;
    }
    let labels = (0..p * q).map(|x| format!("({},{})", x % q, x / q)).collect();
    let spec = GroupFamilySpec::Gpq { p: p as u64, q: q as u64 };
    FiniteGroup::from_fn(p * q, labels, Some(spec), |x, y| {
        let (i1, j1, i2, j2) = (x % q, x / q, y % q, y / q);
        ((j1 + j2) % p) * q + (i1 + rpow[j1] * i2) % q
    })
}

/// Direct product on row-major pairs: `(g, h)` at index `g·|H| + h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let (ng, nh) = (g.order, h.order);
    let labels = (0..ng * nh).map(|x| format!("({},{})", g.label(x / nh), h.label(x % nh))).collect();
    let family = match (&g.family, &h.family) {
        (Some(a), Some(b)) => Some(GroupFamilySpec::product(a.clone(), b.clone())),
        _ => None,
    };
    FiniteGroup::from_fn(ng * nh, labels, family, |x, y| {
        g.mul(x / nh, y / nh) * nh + h.mul(x % nh, y % nh)
    })
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Euler's totient of `n` and the divisors `d` of `n` with `1 < d < n`,
/// ascending.
pub fn totient_and_divisors(n: u64) -> (u64, Vec<u64>) {
    let phi = (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64;
    let divisors = (2..n).filter(|d| n.is_multiple_of(*d)).collect();
    (phi, divisors)
}

pub fn totient(n: u64) -> u64 {
    totient_and_divisors(n).0
}
