//! Integer floor/ceil division with mathematical (not truncating) semantics.

pub fn floor_div(a: i64, b: i64) -> i64 {
    assert!(b != 0, "division by zero");
    let (a, b) = if b < 0 { (-a, -b) } else { (a, b) };
    a.div_euclid(b)
}

pub fn ceil_div(a: i64, b: i64) -> i64 {
    -floor_div(-a, b)
}
