//! Brute-force reference routines for the `treeirr` test suites.
//!
//! Nothing here shares code with the library under test: trees are plain
//! edge lists, isomorphism classes are keyed by a string encoding that is
//! minimised over every possible root, and realizations are produced by
//! decoding Prüfer sequences rather than by growing skeletons.

use std::collections::BTreeSet;

pub type Edges = Vec<(usize, usize)>;

/// Decodes a Prüfer sequence into the edge list of a labeled tree on
/// `seq.len() + 2` vertices.
pub fn prufer_decode(seq: &[usize]) -> Edges {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("prufer leaf");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Every labeled tree on `n` vertices (Cayley: `n^(n-2)` of them).
pub fn all_labeled_trees(n: usize) -> Vec<Edges> {
    assert!(n >= 1);
    if n == 1 {
        return vec![Vec::new()];
    }
    if n == 2 {
        return vec![vec![(0, 1)]];
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    let mut out = Vec::with_capacity(total);
    let mut seq = vec![0usize; len];
    for mut idx in 0..total {
        for slot in seq.iter_mut() {
            *slot = idx % n;
            idx /= n;
        }
        out.push(prufer_decode(&seq));
    }
    out
}

pub fn degrees(n: usize, edges: &[(usize, usize)]) -> Vec<u32> {
    let mut d = vec![0u32; n];
    for &(u, v) in edges {
        d[u] += 1;
        d[v] += 1;
    }
    d
}

/// Non-increasing list of the degrees of non-leaf vertices.
pub fn internal_degrees(n: usize, edges: &[(usize, usize)]) -> Vec<u32> {
    let mut d: Vec<u32> = degrees(n, edges).into_iter().filter(|&x| x > 1).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

fn rooted_string(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_string(adj, w, v))
        .collect();
    kids.sort();
    let mut s = String::from("(");
    for k in kids {
        s.push_str(&k);
    }
    s.push(')');
    s
}

/// Isomorphism-class key: the smallest sorted-parenthesis string over all
/// choices of root. Quadratic, recursive, and deliberately naive.
pub fn min_root_code(n: usize, edges: &[(usize, usize)]) -> String {
    let adj = adjacency(n, edges);
    (0..n)
        .map(|r| rooted_string(&adj, r, usize::MAX))
        .min()
        .expect("non-empty tree")
}

/// Exhaustive isomorphism test by backtracking over vertex bijections,
/// pruned only by degree equality.
pub fn brute_force_isomorphic(n: usize, a: &[(usize, usize)], b: &[(usize, usize)]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut ma = vec![vec![false; n]; n];
    let mut mb = vec![vec![false; n]; n];
    for &(u, v) in a {
        ma[u][v] = true;
        ma[v][u] = true;
    }
    for &(u, v) in b {
        mb[u][v] = true;
        mb[v][u] = true;
    }
    let da = degrees(n, a);
    let db = degrees(n, b);
    let mut sa = da.clone();
    let mut sb = db.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return false;
    }
    struct Search<'a> {
        ma: &'a [Vec<bool>],
        mb: &'a [Vec<bool>],
        da: &'a [u32],
        db: &'a [u32],
        map: Vec<usize>,
        used: Vec<bool>,
    }
    impl Search<'_> {
        fn go(&mut self, i: usize) -> bool {
            let n = self.da.len();
            if i == n {
                return true;
            }
            for t in 0..n {
                if self.used[t] || self.da[i] != self.db[t] {
                    continue;
                }
                if (0..i).any(|j| self.ma[i][j] != self.mb[t][self.map[j]]) {
                    continue;
                }
                self.map[i] = t;
                self.used[t] = true;
                if self.go(i + 1) {
                    return true;
                }
                self.used[t] = false;
            }
            false
        }
    }
    Search {
        ma: &ma,
        mb: &mb,
        da: &da,
        db: &db,
        map: vec![usize::MAX; n],
        used: vec![false; n],
    }
    .go(0)
}

/// Total vertex count forced by an internal degree multiset.
pub fn order_of(seq: &[u32]) -> usize {
    let sum: usize = seq.iter().map(|&d| d as usize).sum();
    sum - seq.len() + 2
}

fn sorted_desc(seq: &[u32]) -> Vec<u32> {
    let mut s = seq.to_vec();
    s.sort_unstable_by(|a, b| b.cmp(a));
    s
}

/// Isomorphism classes of trees with internal degree multiset `seq`, found
/// by decoding every labeled tree on the forced number of vertices and
/// filtering. Only usable while `n^(n-2)` stays small (n ≤ 9 or so).
pub fn realizations_by_full_prufer(seq: &[u32]) -> BTreeSet<String> {
    let want = sorted_desc(seq);
    let n = order_of(seq);
    all_labeled_trees(n)
        .into_iter()
        .filter(|e| internal_degrees(n, e) == want)
        .map(|e| min_root_code(n, &e))
        .collect()
}

/// Same classes as [`realizations_by_full_prufer`], reached through the
/// leaf-label quotient of the Prüfer bijection.
///
/// Internal vertices take the top `k` labels, so the first `n - k` decoding
/// steps strip the original leaves `0, 1, ...` in order and the arrangement
/// of that prefix only permutes leaf labels. Every class is therefore hit by
/// some sequence whose prefix is sorted, leaving `k^(k-2)` tails to try.
pub fn realizations_by_quotient_prufer(seq: &[u32]) -> BTreeSet<String> {
    let want = sorted_desc(seq);
    let k = want.len();
    let n = order_of(&want);
    let mut out = BTreeSet::new();
    if k == 1 {
        let edges: Edges = (1..n).map(|v| (0, v)).collect();
        out.insert(min_root_code(n, &edges));
        return out;
    }
    let tail_len = k - 2;
    let tails = k.pow(tail_len as u32);
    let mut tail = vec![0usize; tail_len];
    for mut idx in 0..tails {
        for slot in tail.iter_mut() {
            *slot = idx % k;
            idx /= k;
        }
        let mut remaining: Vec<i64> = want.iter().map(|&d| d as i64 - 1).collect();
        for &t in &tail {
            remaining[t] -= 1;
        }
        if remaining.iter().any(|&r| r < 0) {
            continue;
        }
        let mut full = Vec::with_capacity(n - 2);
        for (i, &r) in remaining.iter().enumerate() {
            full.extend(std::iter::repeat_n(n - k + i, r as usize));
        }
        full.extend(tail.iter().map(|&t| n - k + t));
        let edges = prufer_decode(&full);
        assert_eq!(internal_degrees(n, &edges), want);
        out.insert(min_root_code(n, &edges));
    }
    out
}

/// Every multiset of `len` degrees drawn from `lo..=hi`, non-increasing.
pub fn multisets(len: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    fn go(len: usize, lo: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for d in (lo..=cap).rev() {
            cur.push(d);
            go(len, lo, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, lo, hi, &mut Vec::new(), &mut out);
    out
}
