use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::instances::{CnfFormula, Gate, Literal, VspCircuit};

struct Builder {
    gates: Vec<Gate>,
    labels: Vec<u64>,
}

impl Builder {
    fn push(&mut self, gate: Gate, label: u64) -> usize {
        self.gates.push(gate);
        self.labels.push(label);
        self.gates.len() - 1
    }
}

/// Encode a CNF formula as a labeled fan-in-2 circuit over the same inputs.
///
/// Each clause of width `w ≥ 2` is a chain of ORs labeled `D-w+2..=D`, where
/// `D` is the formula width, so every clause output sits at label `D`; an AND
/// chain over the clause outputs follows at `D+1, D+2, ...`. When a negative
/// literal feeds a chain, all chain literals go through wrapper gates at
/// label 1 so that no input wire straddles a wrapper wire. At most `4km`
/// wires are used.
pub fn cnf_to_vsp_circuit(formula: &CnfFormula) -> Result<VspCircuit> {
    let n = formula.num_vars();
    let mut b = Builder {
        gates: vec![Gate::Input; n],
        labels: vec![0; n],
    };
    let clauses = formula.clauses();
    if clauses.is_empty() || clauses.iter().any(Vec::is_empty) {
        let out = b.push(Gate::Const(clauses.is_empty()), 0);
        return VspCircuit::new(b.gates, out)?.with_labels(b.labels);
    }
    let d = formula.width() as u64;
    let wrap = clauses
        .iter()
        .any(|c| c.len() >= 2 && c.iter().any(|l| l.is_negated()));
    let mut wrappers: HashMap<Literal, usize> = HashMap::new();
    let mut outputs = Vec::with_capacity(clauses.len());
    for clause in clauses {
        if let [lit] = clause[..] {
            let x = lit.var();
            let g = if lit.is_negated() { Gate::Not(x) } else { Gate::Or(x, x) };
            outputs.push(b.push(g, d));
            continue;
        }
        let mut source = |b: &mut Builder, lit: Literal| -> usize {
            let x = lit.var();
            if !wrap && !lit.is_negated() {
                return x;
            }
            *wrappers.entry(lit).or_insert_with(|| {
                let g = if lit.is_negated() { Gate::Not(x) } else { Gate::Or(x, x) };
                b.push(g, 1)
            })
        };
        let w = clause.len() as u64;
        let first = source(&mut b, clause[0]);
        let second = source(&mut b, clause[1]);
        let mut acc = b.push(Gate::Or(first, second), d - w + 2);
        for (j, &lit) in clause.iter().enumerate().skip(2) {
            let s = source(&mut b, lit);
            acc = b.push(Gate::Or(acc, s), d - w + j as u64 + 1);
        }
        outputs.push(acc);
    }
    let mut acc = outputs[0];
    for (j, &c) in outputs.iter().enumerate().skip(1) {
        acc = b.push(Gate::And(acc, c), d + j as u64);
    }
    VspCircuit::new(b.gates, acc)?.with_labels(b.labels)
}

/// Whether the attached labeling is normal and has no interleaving wires
/// `l(u) < l(u') < l(v) < l(v')`.
pub fn verify_vsp_labeling(circuit: &VspCircuit) -> Result<bool> {
    let labels = circuit
        .labels()
        .ok_or_else(|| Error::param("circuit carries no labeling"))?;
    let wires = circuit.wires();
    if wires.iter().any(|&(u, v)| labels[u] >= labels[v]) {
        return Ok(false);
    }
    let gates = circuit.gates();
    let mut has_out = vec![false; gates.len()];
    for &(u, _) in &wires {
        has_out[u] = true;
    }
    let mut sink_label = None;
    for (i, g) in gates.iter().enumerate() {
        if g.sources().next().is_none() && labels[i] != 0 {
            return Ok(false);
        }
        if !has_out[i] && !matches!(g, Gate::Input) {
            match sink_label {
                None => sink_label = Some(labels[i]),
                Some(d) if d != labels[i] => return Ok(false),
                Some(_) => {}
            }
        }
    }
    let mut spans: Vec<(u64, u64)> = wires.iter().map(|&(u, v)| (labels[u], labels[v])).collect();
    spans.sort_unstable();
    spans.dedup();
    for (i, &(a, b)) in spans.iter().enumerate() {
        for &(c, e) in &spans[i + 1..] {
            if c >= b {
                break;
            }
            if a < c && b < e {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::random::random_cnf;
    use crate::oracles::{circuit_count_sat, count_satisfying, Caps};

    fn check(f: &CnfFormula) -> VspCircuit {
        let caps = Caps::default();
        let c = cnf_to_vsp_circuit(f).unwrap();
        assert_eq!(c.num_inputs(), f.num_vars());
        assert_eq!(circuit_count_sat(&c, &caps).unwrap(), count_satisfying(f, &caps).unwrap());
        assert!(verify_vsp_labeling(&c).unwrap());
        assert!(c.wire_count() <= 4 * f.width() * f.num_clauses());
        c
    }

    #[test]
    fn examples() {
        let or = CnfFormula::new(2, vec![vec![Literal::pos(0), Literal::pos(1)]]).unwrap();
        let c = check(&or);
        assert_eq!(c.wire_count(), 2);
        let c = check(&CnfFormula::empty(2));
        assert_eq!(circuit_count_sat(&c, &Caps::default()).unwrap(), 4u32.into());
        check(&CnfFormula::new(2, vec![vec![]]).unwrap());
        check(&CnfFormula::new(0, vec![]).unwrap());
        check(&CnfFormula::new(1, vec![vec![Literal::neg(0)]]).unwrap());
    }

    #[test]
    fn random_formulas() {
        for seed in 0..50 {
            let f = random_cnf(6, 8, 3, seed).unwrap();
            let c = check(&f);
            assert!(c.wire_count() <= 96);
        }
    }

    #[test]
    fn labeling_rules() {
        let and = VspCircuit::new(vec![Gate::Input, Gate::Input, Gate::And(0, 1)], 2)
            .unwrap()
            .with_labels(vec![0, 0, 1])
            .unwrap();
        assert!(verify_vsp_labeling(&and).unwrap());
        let gates = vec![Gate::Input, Gate::Not(0), Gate::And(0, 1), Gate::And(1, 2)];
        let crossed = VspCircuit::new(gates.clone(), 3).unwrap().with_labels(vec![0, 1, 2, 3]).unwrap();
        assert!(!verify_vsp_labeling(&crossed).unwrap());
        let backwards = VspCircuit::new(gates.clone(), 3).unwrap().with_labels(vec![0, 2, 1, 3]).unwrap();
        assert!(!verify_vsp_labeling(&backwards).unwrap());
        let lifted_input = VspCircuit::new(vec![Gate::Input, Gate::Not(0)], 1)
            .unwrap()
            .with_labels(vec![1, 2])
            .unwrap();
        assert!(!verify_vsp_labeling(&lifted_input).unwrap());
        let two_sinks = VspCircuit::new(vec![Gate::Input, Gate::Not(0), Gate::Not(1), Gate::Not(0)], 2)
            .unwrap()
            .with_labels(vec![0, 1, 2, 1])
            .unwrap();
        assert!(!verify_vsp_labeling(&two_sinks).unwrap());
        assert!(verify_vsp_labeling(&VspCircuit::new(gates, 3).unwrap()).is_err());
    }
}
