//! Isomorphisms between graphs on 27 vertices, by backtracking.

/// Adjacency as one bitmask per vertex.
pub type Adjacency = [u32; 27];

const ALL: u32 = (1 << 27) - 1;

/// Every bijection `f` with `u ~ v` in `a` iff `f(u) ~ f(v)` in `b`, in
/// lexicographic order of the image vectors.
pub fn isomorphisms(a: &Adjacency, b: &Adjacency) -> Vec<[u8; 27]> {
    let mut out = Vec::new();
    let mut f = [0u8; 27];
    extend(a, b, 0, ALL, &mut f, &mut out);
    out
}

pub fn automorphisms(a: &Adjacency) -> Vec<[u8; 27]> {
    isomorphisms(a, a)
}

fn extend(a: &Adjacency, b: &Adjacency, v: usize, unused: u32, f: &mut [u8; 27], out: &mut Vec<[u8; 27]>) {
    if v == 27 {
        out.push(*f);
        return;
    }
    let mut cand = unused;
    for u in 0..v {
        let fu = f[u] as usize;
        if a[v] >> u & 1 == 1 {
            cand &= b[fu];
        } else {
            cand &= !b[fu];
        }
    }
    while cand != 0 {
        let w = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        f[v] = w as u8;
        extend(a, b, v + 1, unused & !(1 << w), f, out);
    }
}

pub fn degree(a: &Adjacency, v: usize) -> u32 {
    a[v].count_ones()
}

pub fn edge_count(a: &Adjacency) -> u32 {
    a.iter().map(|m| m.count_ones()).sum::<u32>() / 2
}
