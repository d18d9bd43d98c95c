//! Oracles that share no code with the library: generating-function counts,
//! Prüfer decoding and AHU-style canonical codes.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::Path;

use lap1::Graph;

pub fn fixture(name: &str) -> Vec<u64> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name);
    std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e}", path.display()))
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| l.trim().parse().expect("fixture line is a count"))
        .collect()
}

type Poly = Vec<i128>;

fn mul(a: &Poly, b: &Poly, deg: usize) -> Poly {
    let mut c = vec![0; deg + 1];
    for (i, &x) in a.iter().enumerate().filter(|(_, &x)| x != 0) {
        for (j, &y) in b.iter().enumerate().take(deg + 1 - i) {
            c[i + j] += x * y;
        }
    }
    c
}

fn pow(a: &Poly, k: usize, deg: usize) -> Poly {
    let mut out = vec![0; deg + 1];
    out[0] = 1;
    for _ in 0..k {
        out = mul(&out, a, deg);
    }
    out
}

/// `f(x^d)` truncated at `deg`.
fn dilate(a: &Poly, d: usize, deg: usize) -> Poly {
    let mut out = vec![0; deg + 1];
    for (i, &x) in a.iter().enumerate() {
        if i * d <= deg {
            out[i * d] = x;
        }
    }
    out
}

fn totient(n: usize) -> i128 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as i128
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Rooted unlabelled trees, `r[n]` for `n <= deg` (A000081).
pub fn rooted_tree_counts(deg: usize) -> Poly {
    let mut r: Poly = vec![0; deg + 1];
    if deg >= 1 {
        r[1] = 1;
    }
    for n in 1..deg {
        let mut s = 0;
        for k in 1..=n {
            let sigma: i128 = (1..=k)
                .filter(|d| k % d == 0)
                .map(|d| d as i128 * r[d])
                .sum();
            s += sigma * r[n - k + 1];
        }
        assert_eq!(s % n as i128, 0);
        r[n + 1] = s / n as i128;
    }
    r
}

/// Free trees by Otter's dissimilarity formula.
pub fn free_tree_counts(deg: usize) -> Poly {
    let r = rooted_tree_counts(deg);
    let r2 = mul(&r, &r, deg);
    let rx2 = dilate(&r, 2, deg);
    (0..=deg)
        .map(|n| {
            let pairs = r2[n] - rx2[n];
            assert_eq!(pairs % 2, 0);
            r[n] - pairs / 2
        })
        .collect()
}

/// Connected unicyclic graphs: a cycle of rooted trees up to rotation and
/// reflection, counted with the dihedral cycle index.
pub fn unicyclic_counts(deg: usize) -> Poly {
    let r = rooted_tree_counts(deg);
    let mut total = vec![0i128; deg + 1];
    for k in 3..=deg {
        let mut acc = vec![0i128; deg + 1];
        for d in (1..=k).filter(|d| k % d == 0) {
            let term = pow(&dilate(&r, d, deg), k / d, deg);
            for (a, t) in acc.iter_mut().zip(&term) {
                *a += 2 * totient(d) * t;
            }
        }
        let r_2 = dilate(&r, 2, deg);
        let flips = if k % 2 == 1 {
            mul(&r, &pow(&r_2, (k - 1) / 2, deg), deg)
                .into_iter()
                .map(|x| 2 * x)
                .collect::<Poly>()
        } else {
            let a = mul(&pow(&r, 2, deg), &pow(&r_2, (k - 2) / 2, deg), deg);
            let b = pow(&r_2, k / 2, deg);
            a.iter().zip(&b).map(|(x, y)| x + y).collect()
        };
        for (a, f) in acc.iter_mut().zip(&flips) {
            *a += k as i128 * f;
        }
        for (t, a) in total.iter_mut().zip(&acc) {
            let den = 4 * k as i128;
            assert_eq!(a % den, 0, "orbit count is integral");
            *t += a / den;
        }
    }
    total
}

/// Every labelled tree on `n` vertices, from its Prüfer sequence.
pub fn prufer_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    match n {
        0 => return vec![],
        1 => return vec![vec![]],
        2 => return vec![vec![(0, 1)]],
        _ => {}
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    let mut out = Vec::with_capacity(total);
    let mut seq = vec![0usize; len];
    for code in 0..total {
        let mut c = code;
        for s in seq.iter_mut() {
            *s = c % n;
            c /= n;
        }
        let mut degree = vec![1usize; n];
        for &s in &seq {
            degree[s] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        for &s in &seq {
            let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
            edges.push((leaf, s));
            degree[leaf] -= 1;
            degree[s] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        edges.push((rest[0], rest[1]));
        out.push(edges);
    }
    out
}

fn adjacency_lists(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

fn rooted_code(adj: &[Vec<usize>], root: usize, blocked: &dyn Fn(usize) -> bool) -> String {
    fn go(adj: &[Vec<usize>], v: usize, parent: usize, blocked: &dyn Fn(usize) -> bool) -> String {
        let mut kids: Vec<String> = adj[v]
            .iter()
            .filter(|&&w| w != parent && !blocked(w))
            .map(|&w| go(adj, w, v, blocked))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    go(adj, root, usize::MAX, blocked)
}

/// Vertices left after repeatedly stripping leaves (the centre of a tree,
/// the cycle of a unicyclic graph).
fn core_vertices(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut alive = vec![true; n];
    let mut left = n;
    loop {
        let leaves: Vec<usize> = (0..n).filter(|&v| alive[v] && deg[v] <= 1).collect();
        if leaves.is_empty() || left <= 2 && leaves.len() == left {
            break;
        }
        for &v in &leaves {
            alive[v] = false;
            left -= 1;
            for &w in &adj[v] {
                if alive[w] {
                    deg[w] -= 1;
                }
            }
        }
    }
    (0..n).filter(|&v| alive[v]).collect()
}

fn is_connected(adj: &[Vec<usize>]) -> bool {
    if adj.is_empty() {
        return true;
    }
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Canonical code of a tree, or `None` if the edges do not form one.
pub fn tree_code(n: usize, edges: &[(usize, usize)]) -> Option<String> {
    if n == 0 || edges.len() + 1 != n {
        return None;
    }
    let adj = adjacency_lists(n, edges);
    if !is_connected(&adj) {
        return None;
    }
    core_vertices(&adj)
        .into_iter()
        .map(|c| rooted_code(&adj, c, &|_| false))
        .min()
}

/// Canonical code of a connected unicyclic graph, or `None` otherwise.
pub fn unicyclic_code(n: usize, edges: &[(usize, usize)]) -> Option<String> {
    if edges.len() != n || n < 3 {
        return None;
    }
    let adj = adjacency_lists(n, edges);
    if !is_connected(&adj) {
        return None;
    }
    let core = core_vertices(&adj);
    let on_cycle: BTreeSet<usize> = core.iter().copied().collect();
    let mut cycle = vec![core[0]];
    let mut prev = usize::MAX;
    loop {
        let cur = *cycle.last().unwrap();
        let next = adj[cur]
            .iter()
            .copied()
            .find(|&w| on_cycle.contains(&w) && w != prev)
            .unwrap();
        if next == cycle[0] {
            break;
        }
        prev = cur;
        cycle.push(next);
    }
    assert_eq!(cycle.len(), core.len());
    let codes: Vec<String> = cycle
        .iter()
        .map(|&c| rooted_code(&adj, c, &|w| on_cycle.contains(&w)))
        .collect();
    let k = codes.len();
    let mut best: Option<String> = None;
    for start in 0..k {
        for dir in [1, k - 1] {
            let s: Vec<&str> = (0..k)
                .map(|i| codes[(start + i * dir) % k].as_str())
                .collect();
            let s = s.join("|");
            if best.as_ref().is_none_or(|b| s < *b) {
                best = Some(s);
            }
        }
    }
    best
}

pub fn code_of(g: &Graph, unicyclic: bool) -> Option<String> {
    if unicyclic {
        unicyclic_code(g.order(), &g.edges())
    } else {
        tree_code(g.order(), &g.edges())
    }
}

/// Isomorphism classes of labelled unicyclic graphs built from every
/// labelled tree plus one extra edge.
pub fn brute_force_unicyclic(n: usize) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    for edges in prufer_trees(n) {
        let present: BTreeSet<(usize, usize)> =
            edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        for u in 0..n {
            for v in u + 1..n {
                if !present.contains(&(u, v)) {
                    let mut e = edges.clone();
                    e.push((u, v));
                    out.insert(unicyclic_code(n, &e).unwrap());
                }
            }
        }
    }
    out
}

pub fn brute_force_trees(n: usize) -> BTreeSet<String> {
    prufer_trees(n)
        .iter()
        .map(|e| tree_code(n, e).unwrap())
        .collect()
}
