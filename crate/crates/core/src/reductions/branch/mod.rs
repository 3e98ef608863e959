mod block_code;
mod hitting;
mod splitting;
mod vsp;

pub use block_code::{make_block_code, BlockCode};
pub use hitting::{
    cnf_to_hitting_set, cnf_to_parity_hitting_set, hitting_set_to_monotone_cnf,
    pad_to_multiple, HittingSetInstance,
};
pub use splitting::{
    hitting_set_to_set_splitting, nae_to_cnf, set_splitting_to_nae_cnf, SplittingCase,
};
pub use vsp::{cnf_to_vsp_circuit, verify_vsp_labeling};
