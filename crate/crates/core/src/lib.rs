pub mod gfq;
pub mod linalg;
pub mod perm;
pub mod permmod;
pub mod lindim;
pub mod suite;
