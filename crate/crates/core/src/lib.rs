pub mod analytic;
pub mod audit;
pub mod bounds;
pub mod curves;
pub mod heights;
pub mod modpoly;
pub mod numerics;
pub mod velu;
