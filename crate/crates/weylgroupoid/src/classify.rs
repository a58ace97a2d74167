//! Recognition of finite Coxeter and Cartan types from their diagrams.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    /// Dihedral `I₂(m)` for `m = 5` or `m ≥ 7`.
    I(u32),
}

/// One connected component of a finite diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub family: Family,
    /// Nodes in the standard order of the family. For `B`/`C` the multiple
    /// bond joins the last two nodes; for `D`/`E` the branch arms follow the
    /// usual numbering.
    pub nodes: Vec<usize>,
}

impl Component {
    pub fn rank(&self) -> usize {
        self.nodes.len()
    }

    /// Order of the Coxeter group of this component.
    pub fn group_order(&self) -> u128 {
        let n = self.rank() as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
            Family::H => {
                if n == 3 {
                    120
                } else {
                    14_400
                }
            }
            Family::I(m) => 2 * m as u128,
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.rank();
        match self.family {
            Family::A => write!(f, "A{n}"),
            Family::B => write!(f, "B{n}"),
            Family::C => write!(f, "C{n}"),
            Family::D => write!(f, "D{n}"),
            Family::E => write!(f, "E{n}"),
            Family::F => write!(f, "F4"),
            Family::G => write!(f, "G2"),
            Family::H => write!(f, "H{n}"),
            Family::I(m) => write!(f, "I2({m})"),
        }
    }
}

/// Joins component labels with `x`, e.g. `A2xA1`.
pub fn label(components: &[Component]) -> String {
    components
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join("x")
}

fn components_of(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut k = 0;
        while k < comp.len() {
            let u = comp[k];
            for v in 0..n {
                if !seen[v] && v != u && adjacent(u, v) {
                    seen[v] = true;
                    comp.push(v);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Walks a path component from one of its leaves.
fn path_order(nodes: &[usize], m: &[Vec<u32>]) -> Option<Vec<usize>> {
    let nbrs = |u: usize| -> Vec<usize> {
        nodes.iter().copied().filter(|&v| v != u && m[u][v] != 2).collect()
    };
    if nodes.len() == 1 {
        return Some(nodes.to_vec());
    }
    let start = *nodes.iter().find(|&&u| nbrs(u).len() == 1)?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next: Vec<usize> = nbrs(cur).into_iter().filter(|&v| v != prev).collect();
        match next.as_slice() {
            [] => break,
            [v] => {
                prev = cur;
                cur = *v;
                order.push(cur);
            }
            _ => return None,
        }
    }
    (order.len() == nodes.len()).then_some(order)
}

/// Classifies a Coxeter matrix (`m[i][i] = 1`, `m[i][j] ≥ 2`, `0` for `∞`).
/// Returns `None` unless every component is of finite type.
pub fn classify_coxeter(m: &[Vec<u32>]) -> Option<Vec<Component>> {
    let n = m.len();
    let mut out = Vec::new();
    for comp in components_of(n, |u, v| m[u][v] != 2) {
        out.push(classify_component(&comp, m)?);
    }
    Some(out)
}

fn classify_component(nodes: &[usize], m: &[Vec<u32>]) -> Option<Component> {
    let k = nodes.len();
    let mut edges = Vec::new();
    for (a, &u) in nodes.iter().enumerate() {
        for &v in &nodes[a + 1..] {
            match m[u][v] {
                2 => {}
                0 => return None,
                w => edges.push((u, v, w)),
            }
        }
    }
    if edges.len() != k.saturating_sub(1) {
        return None; // contains a cycle
    }
    if k == 1 {
        return Some(Component {
            family: Family::A,
            nodes: nodes.to_vec(),
        });
    }
    if k == 2 {
        let w = edges[0].2;
        let family = match w {
            3 => Family::A,
            4 => Family::B,
            6 => Family::G,
            w => Family::I(w),
        };
        return Some(Component {
            family,
            nodes: nodes.to_vec(),
        });
    }
    let heavy: Vec<_> = edges.iter().filter(|e| e.2 > 3).collect();
    if heavy.len() > 1 {
        return None;
    }
    if let Some(&&(u, v, w)) = heavy.first() {
        let mut order = path_order(nodes, m)?;
        let pos = |x: usize| order.iter().position(|&y| y == x).unwrap();
        let (pu, pv) = (pos(u).min(pos(v)), pos(u).max(pos(v)));
        let at_end = pu == 0 || pv == k - 1;
        if pu == 0 {
            order.reverse();
        }
        let family = match (w, k, at_end) {
            (4, _, true) => Family::B,
            (4, 4, false) => Family::F,
            (5, 3, true) | (5, 4, true) => Family::H,
            _ => return None,
        };
        if family == Family::H {
            // H numbering puts the 5-bond first
            order.reverse();
        }
        return Some(Component {
            family,
            nodes: order,
        });
    }
    // simply laced
    let degree = |u: usize| nodes.iter().filter(|&&v| v != u && m[u][v] == 3).count();
    let branch: Vec<usize> = nodes.iter().copied().filter(|&u| degree(u) > 2).collect();
    match branch.as_slice() {
        [] => Some(Component {
            family: Family::A,
            nodes: path_order(nodes, m)?,
        }),
        [c] if degree(*c) == 3 => {
            let mut arms: Vec<Vec<usize>> = Vec::new();
            for &start in nodes.iter().filter(|&&v| v != *c && m[*c][v] == 3) {
                let mut arm = vec![start];
                let (mut prev, mut cur) = (*c, start);
                loop {
                    let next: Vec<usize> = nodes
                        .iter()
                        .copied()
                        .filter(|&v| v != cur && v != prev && m[cur][v] == 3)
                        .collect();
                    match next.as_slice() {
                        [] => break,
                        [v] => {
                            prev = cur;
                            cur = *v;
                            arm.push(cur);
                        }
                        _ => return None,
                    }
                }
                arms.push(arm);
            }
            arms.sort_by_key(|a| (a.len(), a[0]));
            let lens: Vec<usize> = arms.iter().map(|a| a.len()).collect();
            match lens.as_slice() {
                [1, 1, _] => {
                    // D_n: long arm reversed, branch, then the two short arms
                    let mut order: Vec<usize> = arms[2].iter().rev().copied().collect();
                    order.push(*c);
                    order.push(arms[0][0]);
                    order.push(arms[1][0]);
                    Some(Component {
                        family: Family::D,
                        nodes: order,
                    })
                }
                [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => {
                    // E_n: α1, α3 (arm of length 2), α2 (short arm), α4 branch, long arm
                    let mut order = vec![arms[1][1], arms[0][0], arms[1][0], *c];
                    order.extend(arms[2].iter().copied());
                    Some(Component {
                        family: Family::E,
                        nodes: order,
                    })
                }
                _ => None,
            }
        }
        _ => None,
    }
}

/// Classifies an integer Cartan matrix (`a[i][i] = 2`).
pub fn classify_cartan(a: &[Vec<i32>]) -> Option<Vec<Component>> {
    let n = a.len();
    let mut m = vec![vec![2u32; n]; n];
    for i in 0..n {
        if a[i][i] != 2 {
            return None;
        }
        m[i][i] = 1;
        for j in 0..n {
            if i == j {
                continue;
            }
            if (a[i][j] == 0) != (a[j][i] == 0) || a[i][j] > 0 {
                return None;
            }
            m[i][j] = match a[i][j] * a[j][i] {
                0 => 2,
                1 => 3,
                2 => 4,
                3 => 6,
                _ => return None,
            };
        }
    }
    let mut comps = classify_coxeter(&m)?;
    for c in &mut comps {
        if c.family == Family::B && c.rank() >= 3 {
            let k = c.rank();
            let (leaf, nbr) = (c.nodes[k - 1], c.nodes[k - 2]);
            if a[leaf][nbr] != -2 {
                c.family = Family::C;
            }
        }
    }
    Some(comps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize, weights: &[u32]) -> Vec<Vec<u32>> {
        let mut m = vec![vec![2; n]; n];
        for i in 0..n {
            m[i][i] = 1;
        }
        for (i, &w) in weights.iter().enumerate() {
            m[i][i + 1] = w;
            m[i + 1][i] = w;
        }
        m
    }

    #[test]
    fn paths() {
        assert_eq!(label(&classify_coxeter(&path(4, &[3, 3, 3])).unwrap()), "A4");
        assert_eq!(label(&classify_coxeter(&path(3, &[4, 3])).unwrap()), "B3");
        assert_eq!(label(&classify_coxeter(&path(4, &[3, 4, 3])).unwrap()), "F4");
        assert_eq!(label(&classify_coxeter(&path(3, &[5, 3])).unwrap()), "H3");
        assert_eq!(label(&classify_coxeter(&path(2, &[7])).unwrap()), "I2(7)");
        assert!(classify_coxeter(&path(4, &[4, 3, 4])).is_none());
        assert!(classify_coxeter(&path(5, &[3, 4, 3, 3])).is_none());
    }

    #[test]
    fn branched() {
        let mut m = path(4, &[3, 3, 2]);
        m[1][3] = 3;
        m[3][1] = 3;
        let c = classify_coxeter(&m).unwrap();
        assert_eq!(label(&c), "D4");
        assert_eq!(c[0].group_order(), 192);
        let mut e6 = path(6, &[3, 3, 3, 3, 2]);
        e6[2][5] = 3;
        e6[5][2] = 3;
        let c = classify_coxeter(&e6).unwrap();
        assert_eq!(label(&c), "E6");
    }

    #[test]
    fn products() {
        let m = path(3, &[3, 2]);
        let c = classify_coxeter(&m).unwrap();
        assert_eq!(label(&c), "A2xA1");
        assert_eq!(c.iter().map(|c| c.group_order()).product::<u128>(), 12);
    }

    #[test]
    fn b_versus_c() {
        let b3 = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]];
        assert_eq!(label(&classify_cartan(&b3).unwrap()), "B3");
        let c3 = vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]];
        assert_eq!(label(&classify_cartan(&c3).unwrap()), "C3");
    }
}
