use clap::ValueEnum;
use wheelecc_core::closedform::{
    ecc_matrix_wheel, ecc_matrix_wheel_minus_edge, inverse_e_closed, laplacian_hat,
    laplacian_tilde, null_vectors, pinv_e_closed, quotient_matrix, weight_w,
};
use wheelecc_core::graphs::{build_wheel, delete_cycle_edge};
use wheelecc_core::{MatrixQ, Result, VectorQ};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Object {
    /// Eccentricity matrix of W_n.
    #[value(name = "E")]
    E,
    /// Eccentricity matrix of W_n with the rim edge v2-vn removed.
    #[value(name = "E_minus_edge")]
    EMinusEdge,
    /// Laplacian-like matrix of the inverse formula (n mod 3 != 1).
    #[value(name = "Ltilde")]
    Ltilde,
    /// Laplacian-like matrix of the Moore-Penrose formula (n mod 3 = 1).
    #[value(name = "Lhat")]
    Lhat,
    /// Inverse of E(W_n) (n mod 3 != 1).
    #[value(name = "inverse")]
    Inverse,
    /// Moore-Penrose inverse of E(W_n) (n mod 3 = 1).
    #[value(name = "pinv")]
    Pinv,
    /// The vector w = (7-n, 1, ..., 1)/6.
    #[value(name = "w")]
    W,
    /// The two kernel vectors of E(W_n) (n mod 3 = 1).
    #[value(name = "nullvecs")]
    Nullvecs,
    /// Quotient matrix of the hub/rim partition.
    #[value(name = "quotient")]
    Quotient,
    /// Edge list of W_n.
    #[value(name = "wheel")]
    Wheel,
    /// Edge list of W_n - e.
    #[value(name = "wheel_minus_edge")]
    WheelMinusEdge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generated {
    Matrix(MatrixQ),
    Vector(VectorQ),
    Pair(VectorQ, VectorQ),
    /// 1-indexed edges.
    Edges(Vec<(usize, usize)>),
}

pub fn generate(object: Object, n: usize) -> Result<Generated> {
    let one_indexed = |edges: Vec<(usize, usize)>| edges.into_iter().map(|(a, b)| (a + 1, b + 1)).collect();
    Ok(match object {
        Object::E => Generated::Matrix(ecc_matrix_wheel(n)?),
        Object::EMinusEdge => Generated::Matrix(ecc_matrix_wheel_minus_edge(n)?),
        Object::Ltilde => Generated::Matrix(laplacian_tilde(n)?),
        Object::Lhat => Generated::Matrix(laplacian_hat(n)?),
        Object::Inverse => Generated::Matrix(inverse_e_closed(n)?),
        Object::Pinv => Generated::Matrix(pinv_e_closed(n)?),
        Object::W => Generated::Vector(weight_w(n)?),
        Object::Nullvecs => {
            let (x, y) = null_vectors(n)?;
            Generated::Pair(x, y)
        }
        Object::Quotient => Generated::Matrix(quotient_matrix(n)?),
        Object::Wheel => Generated::Edges(one_indexed(build_wheel(n)?.edges())),
        Object::WheelMinusEdge => Generated::Edges(one_indexed(delete_cycle_edge(&build_wheel(n)?)?.edges())),
    })
}
