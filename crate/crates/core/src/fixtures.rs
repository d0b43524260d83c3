//! Bundled example presentations (GF(7) unless suffixed `_Q`).

macro_rules! fixtures {
    ($($name:ident => $file:literal),* $(,)?) => {
        $(pub const $name: &str = include_str!(concat!("../fixtures/", $file));)*
        /// Every finite-dimensional fixture, by name.
        pub const ALL: &[(&str, &str)] = &[$((stringify!($name), $name)),*];
    };
}

fixtures! {
    K1 => "K1.alg",
    A2 => "A2.alg",
    H4 => "H4.alg",
    L1 => "L1.alg",
    L2 => "L2.alg",
    L3 => "L3.alg",
    C3 => "C3.alg",
    XU => "XU.alg",
    L1_Q => "L1_Q.alg",
    L2_Q => "L2_Q.alg",
    XU_Q => "XU_Q.alg",
}

/// A free loop; parses but is infinite dimensional.
pub const LOOP: &str = include_str!("../fixtures/LOOP.alg");
