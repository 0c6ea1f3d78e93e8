//! Deterministic multichannel acoustic-feedback laboratory.
//!
//! Simulates the loudspeaker-room-microphone feedback loop sample-accurately,
//! runs pluggable controllers (RLS canceller, multichannel Wiener filter,
//! a compact convolutional-recurrent network, and a hybrid of the two) inside
//! that loop, trains the network offline or in the loop, and scores howling
//! incidence and speech quality across gain/delay sweeps.

pub mod scalar;

pub use scalar::Sample;
