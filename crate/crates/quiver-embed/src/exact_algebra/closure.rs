use super::matrix::RationalMatrix;

/// Smallest collection of subspaces `T_i ⊆ Q^{dims[i]}` containing the
/// column spans of `seeds[i]` with `x[i] T_i ⊆ T_{i+1}` and
/// `y[i] T_{i+1} ⊆ T_i`.
///
/// `x[i]` is `dims[i+1] × dims[i]` and `y[i]` is `dims[i] × dims[i+1]`.
/// Returns column bases.
pub fn invariant_closure(
    dims: &[usize],
    seeds: &[RationalMatrix],
    x: &[RationalMatrix],
    y: &[RationalMatrix],
) -> Vec<RationalMatrix> {
    let m = dims.len();
    let mut t: Vec<RationalMatrix> = (0..m)
        .map(|i| {
            RationalMatrix::hstack(dims[i], &[&seeds[i]])
                .expect("seed shape")
                .col_basis()
        })
        .collect();
    loop {
        let mut grew = false;
        for i in 0..m {
            let mut parts = vec![t[i].clone()];
            if i > 0 {
                parts.push(&x[i - 1] * &t[i - 1]);
            }
            if i + 1 < m {
                parts.push(&y[i] * &t[i + 1]);
            }
            let refs: Vec<&RationalMatrix> = parts.iter().collect();
            let next = RationalMatrix::hstack(dims[i], &refs)
                .expect("closure shape")
                .col_basis();
            if next.cols() > t[i].cols() {
                grew = true;
            }
            t[i] = next;
        }
        if !grew {
            return t;
        }
    }
}

/// Largest collection of subspaces `S_i ⊆ ker constraints[i]` with
/// `x[i] S_i ⊆ S_{i+1}` and `y[i] S_{i+1} ⊆ S_i`, by iterated intersection.
///
/// Each `S_i` is tracked as the kernel of a growing constraint matrix:
/// `u ∈ S_i` must also satisfy the constraints of `S_{i±1}` after one step.
/// Returns column bases.
pub fn largest_invariant_in_kernels(
    dims: &[usize],
    constraints: &[RationalMatrix],
    x: &[RationalMatrix],
    y: &[RationalMatrix],
) -> Vec<RationalMatrix> {
    let m = dims.len();
    let mut c: Vec<RationalMatrix> = (0..m)
        .map(|i| {
            RationalMatrix::vstack(dims[i], &[&constraints[i]])
                .expect("constraint shape")
                .row_basis()
        })
        .collect();
    loop {
        let mut grew = false;
        for i in 0..m {
            let mut parts = vec![c[i].clone()];
            if i + 1 < m {
                parts.push(&c[i + 1] * &x[i]);
            }
            if i > 0 {
                parts.push(&c[i - 1] * &y[i - 1]);
            }
            let refs: Vec<&RationalMatrix> = parts.iter().collect();
            let next = RationalMatrix::vstack(dims[i], &refs)
                .expect("constraint shape")
                .row_basis();
            if next.rows() > c[i].rows() {
                grew = true;
            }
            c[i] = next;
        }
        if !grew {
            return c.iter().map(RationalMatrix::kernel).collect();
        }
    }
}
