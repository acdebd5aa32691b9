//! Heilbronn matrices of prime determinant, in Cremona's parametrization.
//! Summing the right action of these over a Manin symbol computes T_p for
//! p not dividing the level, in any weight.

/// Matrices [[a, b], [c, d]] of determinant p; the list starts with
/// [1, 0, 0, p] and continues with one continued-fraction strand per
/// r in [-p/2, p/2].
pub fn heilbronn_cremona(p: u64) -> Vec<[i64; 4]> {
    let p = p as i64;
    let mut out: Vec<[i64; 4]> = vec![[1, 0, 0, p]];
    for r in -(p / 2)..=(p / 2) {
        let mut x1 = p;
        let mut x2 = -r;
        let mut y1 = 0i64;
        let mut y2 = 1i64;
        let mut a = -p;
        let mut b = r;
        out.push([x1, x2, y1, y2]);
        while b != 0 {
            let q = round_nearest(a, b);
            let c = a - b * q;
            a = -b;
            b = c;
            let x3 = q * x2 - x1;
            x1 = x2;
            x2 = x3;
            let y3 = q * y2 - y1;
            y1 = y2;
            y2 = y3;
            out.push([x1, x2, y1, y2]);
        }
    }
    out
}

/// Nearest integer to a/b, ties away from zero.
fn round_nearest(a: i64, b: i64) -> i64 {
    let (a, b) = if b < 0 { (-a, -b) } else { (a, b) };
    if a >= 0 {
        (2 * a + b).div_euclid(2 * b)
    } else {
        -((2 * (-a) + b).div_euclid(2 * b))
    }
}
