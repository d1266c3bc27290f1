//! Finite groups given by multiplication tables.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use super::FiniteError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validate a multiplication table; row g, column h holds g·h.
    pub fn from_table(
        name: impl Into<String>,
        labels: Vec<String>,
        table: Vec<Vec<usize>>,
    ) -> Result<Self, FiniteError> {
        let n = table.len();
        let bad = |m: String| Err(FiniteError::InvalidTable(m));
        if n == 0 {
            return bad("empty table".into());
        }
        if labels.len() != n {
            return bad(format!("{} labels for {} elements", labels.len(), n));
        }
        for (g, row) in table.iter().enumerate() {
            if row.len() != n {
                return bad(format!("row {} has {} entries, expected {}", g + 1, row.len(), n));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return bad(format!("row {} has out-of-range entry {}", g + 1, x + 1));
            }
        }
        let Some(identity) = (0..n).find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g)) else {
            return bad("no identity element".into());
        };
        let mut inverse = Vec::with_capacity(n);
        for g in 0..n {
            match (0..n).find(|&h| table[g][h] == identity && table[h][g] == identity) {
                Some(h) => inverse.push(h),
                None => return bad(format!("element {} has no inverse", labels[g])),
            }
        }
        for g in 0..n {
            for h in 0..n {
                for k in 0..n {
                    if table[table[g][h]][k] != table[g][table[h][k]] {
                        return bad(format!(
                            "associativity fails at ({}, {}, {})",
                            labels[g], labels[h], labels[k]
                        ));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            name: name.into(),
            labels,
            table,
            identity,
            inverse,
        })
    }

    /// Cyclic group ℤn, written additively.
    pub fn cyclic(n: usize) -> Result<Self, FiniteError> {
        if !(1..=12).contains(&n) {
            return Err(FiniteError::UnknownGroup(format!("Z{n} (cyclic groups need 1 <= n <= 12)")));
        }
        let table = (0..n).map(|g| (0..n).map(|h| (g + h) % n).collect()).collect();
        let labels = (0..n).map(|g| g.to_string()).collect();
        FiniteGroup::from_table(format!("Z{n}"), labels, table)
    }

    /// Symmetric group on three points, elements in lexicographic order of
    /// their images, composed right to left.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
        let table = perms
            .iter()
            .map(|g| perms.iter().map(|h| index([g[h[0]], g[h[1]], g[h[2]]])).collect())
            .collect();
        let labels = perms.iter().map(|p| cycle_notation(p)).collect();
        FiniteGroup::from_table("S3", labels, table).expect("S3 table")
    }

    /// Dihedral group of the square; index k + 4j is r^k s^j.
    pub fn dihedral4() -> Self {
        let table = (0..8)
            .map(|g: usize| {
                (0..8)
                    .map(|h: usize| {
                        let (a, b) = (g % 4, g / 4);
                        let (c, d) = (h % 4, h / 4);
                        let k = if b == 0 { (a + c) % 4 } else { (a + 4 - c) % 4 };
                        k + 4 * ((b + d) % 2)
                    })
                    .collect()
            })
            .collect();
        let labels = ["e", "r", "r^2", "r^3", "s", "rs", "r^2s", "r^3s"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        FiniteGroup::from_table("D4", labels, table).expect("D4 table")
    }

    /// Quaternion group; index 2u + σ is (−1)^σ times unit u of 1, i, j, k.
    pub fn quaternion() -> Self {
        // unit products: (sign, unit)
        const UNIT: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let table = (0..8)
            .map(|g: usize| {
                (0..8)
                    .map(|h: usize| {
                        let (s, u) = UNIT[g / 2][h / 2];
                        2 * u + (s + g % 2 + h % 2) % 2
                    })
                    .collect()
            })
            .collect();
        let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        FiniteGroup::from_table("Q8", labels, table).expect("Q8 table")
    }

    /// Built-in by name: Z1..Z12, S3, D4, Q8 (case-insensitive).
    pub fn builtin(name: &str) -> Result<Self, FiniteError> {
        let lower = name.to_ascii_lowercase();
        match lower.as_str() {
            "s3" => Ok(Self::symmetric3()),
            "d4" => Ok(Self::dihedral4()),
            "q8" => Ok(Self::quaternion()),
            _ => match lower.strip_prefix('z').and_then(|n| n.parse::<usize>().ok()) {
                Some(n) => Self::cyclic(n),
                None => Err(FiniteError::UnknownGroup(name.to_string())),
            },
        }
    }

    /// Parse the plain-text table format: n, then n rows of 1-based indices.
    pub fn parse_table(name: impl Into<String>, text: &str) -> Result<Self, FiniteError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let fmt_err = |line: usize, message: String| FiniteError::Format { line, message };
        let (first, header) = lines.next().ok_or_else(|| fmt_err(1, "missing element count".into()))?;
        let n: usize = header
            .parse()
            .map_err(|_| fmt_err(first, format!("expected element count, found '{header}'")))?;
        let mut table = Vec::with_capacity(n);
        for (line, row) in lines.by_ref().take(n) {
            let entries = row
                .split_whitespace()
                .map(|tok| match tok.parse::<usize>() {
                    Ok(k) if (1..=n).contains(&k) => Ok(k - 1),
                    _ => Err(fmt_err(line, format!("entry '{tok}' is not an index in 1..={n}"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            if entries.len() != n {
                return Err(fmt_err(line, format!("expected {n} entries, found {}", entries.len())));
            }
            table.push(entries);
        }
        if table.len() != n {
            return Err(fmt_err(first + table.len() + 1, format!("expected {n} rows, found {}", table.len())));
        }
        if let Some((line, _)) = lines.next() {
            return Err(fmt_err(line, "trailing content after table".into()));
        }
        let labels = (1..=n).map(|g| g.to_string()).collect();
        FiniteGroup::from_table(name, labels, table)
    }

    pub fn to_table_text(&self) -> String {
        let mut out = format!("{}\n", self.order());
        for row in &self.table {
            let cells: Vec<String> = row.iter().map(|x| (x + 1).to_string()).collect();
            let _ = writeln!(out, "{}", cells.join(" "));
        }
        out
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|g| (0..g).all(|h| self.mul(g, h) == self.mul(h, g)))
    }

    /// Conjugacy classes, each sorted, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for g in 0..n {
            if seen[g] {
                continue;
            }
            let class: BTreeSet<usize> = (0..n).map(|x| self.mul(self.mul(x, g), self.inv(x))).collect();
            for &c in &class {
                seen[c] = true;
            }
            classes.push(class.into_iter().collect());
        }
        classes
    }

    /// Whether the given elements form a subgroup.
    pub fn is_subgroup(&self, elements: &[usize]) -> bool {
        let set: BTreeSet<usize> = elements.iter().copied().collect();
        !set.is_empty()
            && set.iter().all(|&g| g < self.order())
            && set.contains(&self.identity)
            && set.iter().all(|&g| set.contains(&self.inv(g)))
            && set.iter().all(|&g| set.iter().all(|&h| set.contains(&self.mul(g, h))))
    }

    /// Subgroup generated by the given elements, sorted.
    pub fn generated(&self, generators: &[usize]) -> Vec<usize> {
        let mut set = BTreeSet::from([self.identity]);
        let mut queue: VecDeque<usize> = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in generators {
                let y = self.mul(x, g);
                if set.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        set.into_iter().collect()
    }

    /// All subgroups, sorted by order then elements.
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut frontier = vec![vec![self.identity]];
        found.insert(vec![self.identity]);
        while let Some(h) = frontier.pop() {
            for g in 0..self.order() {
                if h.binary_search(&g).is_ok() {
                    continue;
                }
                let mut gens = h.clone();
                gens.push(g);
                let next = self.generated(&gens);
                if found.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        let mut all: Vec<Vec<usize>> = found.into_iter().collect();
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        all
    }

    /// Right cosets K·g with the smallest index of each as representative.
    pub fn right_coset_representatives(&self, subgroup: &[usize]) -> Vec<usize> {
        let mut covered = vec![false; self.order()];
        let mut reps = Vec::new();
        for g in 0..self.order() {
            if covered[g] {
                continue;
            }
            reps.push(g);
            for &k in subgroup {
                covered[self.mul(k, g)] = true;
            }
        }
        reps
    }

    /// Index i with g ∈ K·r_i.
    pub fn coset_of(&self, subgroup: &[usize], reps: &[usize], g: usize) -> usize {
        reps.iter()
            .position(|&r| subgroup.contains(&self.mul(g, self.inv(r))))
            .expect("coset representatives cover the group")
    }
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            out.push_str(&(x + 1).to_string());
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_validate() {
        for g in ["Z1", "Z4", "z12", "S3", "D4", "Q8"] {
            FiniteGroup::builtin(g).unwrap();
        }
        assert!(FiniteGroup::builtin("Z13").is_err());
        assert!(FiniteGroup::builtin("A5").is_err());
    }

    #[test]
    fn s3_labels_and_classes() {
        let s3 = FiniteGroup::symmetric3();
        assert_eq!(s3.labels(), ["e", "(23)", "(12)", "(123)", "(132)", "(13)"]);
        let sizes: Vec<usize> = s3.conjugacy_classes().iter().map(Vec::len).collect();
        assert_eq!(sizes, [1, 3, 2]);
        assert!(!s3.is_abelian());
    }

    #[test]
    fn subgroup_counts() {
        let count = |name: &str| FiniteGroup::builtin(name).unwrap().subgroups().len();
        assert_eq!(count("Z4"), 3);
        assert_eq!(count("S3"), 6);
        assert_eq!(count("D4"), 10);
        assert_eq!(count("Q8"), 6);
        assert_eq!(count("Z12"), 6);
    }

    #[test]
    fn quaternion_relations() {
        let q = FiniteGroup::quaternion();
        let (i, j, k, m1) = (2, 4, 6, 1);
        assert_eq!(q.mul(i, j), k);
        assert_eq!(q.mul(j, i), 7);
        assert_eq!(q.mul(i, i), m1);
        assert_eq!(q.mul(q.mul(i, j), k), m1);
    }

    #[test]
    fn table_text_round_trip() {
        let d4 = FiniteGroup::dihedral4();
        let back = FiniteGroup::parse_table("D4", &d4.to_table_text()).unwrap();
        assert_eq!(back.table(), d4.table());
    }

    #[test]
    fn bad_tables_rejected() {
        assert!(matches!(
            FiniteGroup::parse_table("x", "2\n1 2\n2 2\n"),
            Err(FiniteError::InvalidTable(_))
        ));
        assert!(matches!(
            FiniteGroup::parse_table("x", "2\n1 2\n2 3\n"),
            Err(FiniteError::Format { line: 3, .. })
        ));
        assert!(matches!(
            FiniteGroup::parse_table("x", "2\n1 2\n"),
            Err(FiniteError::Format { .. })
        ));
        // identity and inverses fine, associativity broken
        let text = "3\n1 2 3\n2 1 1\n3 3 1\n";
        match FiniteGroup::parse_table("x", text) {
            Err(FiniteError::InvalidTable(m)) => assert!(m.contains("associativity") || m.contains("inverse")),
            other => panic!("{other:?}"),
        }
    }
}
