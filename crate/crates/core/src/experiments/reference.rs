//! Published reference values for the two tables, in row layout
//! `[λ_min, scaled λ_min, λ_max, scaled λ_max, μ₂, scaled μ₂]`.

/// Relative tolerance used by the diffs.
pub const REFERENCE_REL_TOL: f64 = 5e-3;

pub const TABLE1: [(usize, [f64; 6]); 6] = [
    (64, [7.8737e-2, 5.0392, 120.9373, 1.015, 1535.9667, 0.2015]),
    (128, [3.9480e-2, 5.0534, 212.8457, 1.010, 5391.2724, 0.1999]),
    (256, [1.9768e-2, 5.0607, 380.1275, 1.006, 19229.1665, 0.1989]),
    (512, [9.8914e-3, 5.0644, 687.1094, 1.004, 69465.1987, 0.1982]),
    (1024, [4.9476e-3, 5.0663, 1254.2460, 1.002, 253507.4186, 0.1978]),
    (2048, [2.4743e-3, 5.0673, 2307.9670, 1.001, 932790.7960, 0.1976]),
];

pub const TABLE2: [(usize, [f64; 6]); 6] = [
    (64, [15.4546, 1.004, 1793.0355, 2.3217, 116.0198, 1.8128]),
    (128, [26.5447, 1.006, 6479.2722, 2.3715, 244.0896, 1.9069]),
    (256, [46.4058, 1.005, 23557.6771, 2.4048, 507.6456, 1.9830]),
    (512, [82.3378, 1.003, 86165.4914, 2.4268, 1046.4872, 2.0439]),
    (1024, [147.9148, 1.001, 316954.9557, 2.4412, 2142.8207, 2.0926]),
    (2048, [268.6040, 1.000, 1175952.6713, 2.4587, 4378.0162, 2.1377]),
];

pub fn lookup(table: &[(usize, [f64; 6])], n: usize) -> Option<[f64; 6]> {
    table.iter().find(|(m, _)| *m == n).map(|(_, v)| *v)
}
