use num_bigint::BigUint;

use crate::error::Result;
use crate::instances::{Gate, VspCircuit};

use super::Caps;

/// Number of input assignments that make the output gate true.
pub fn circuit_count_sat(circuit: &VspCircuit, caps: &Caps) -> Result<BigUint> {
    let k = circuit.num_inputs();
    caps.check("circuit inputs", k)?;
    let gates = circuit.gates();
    let mut input_index = vec![0usize; gates.len()];
    let mut next = 0;
    for (i, g) in gates.iter().enumerate() {
        if matches!(g, Gate::Input) {
            input_index[i] = next;
            next += 1;
        }
    }
    let mut value = vec![false; gates.len()];
    let mut count = 0u64;
    for a in 0..1u64 << k {
        for &i in circuit.order() {
            value[i] = match gates[i] {
                Gate::Input => a >> input_index[i] & 1 == 1,
                Gate::Const(b) => b,
                Gate::Not(x) => !value[x],
                Gate::And(x, y) => value[x] && value[y],
                Gate::Or(x, y) => value[x] || value[y],
            };
        }
        count += value[circuit.output()] as u64;
    }
    Ok(count.into())
}
