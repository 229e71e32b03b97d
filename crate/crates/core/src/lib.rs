pub mod codes;
pub mod distribution;
pub mod gf;
pub mod linalg;
pub mod qcombin;
pub mod verify;
