//! Combinatorics of nonsymmetric Macdonald polynomials at `t = 0`: key
//! tabloids, their statistics, slide and key expansions, weak dual
//! equivalence classes and nonsymmetric Kostka–Foulkes polynomials.

pub mod bases;
pub mod dualeq;
pub mod enumerate;
pub mod fillings;
pub mod kostka;
pub mod polyring;
pub mod shapes;
pub mod verify;
