//! Undoable mutation sessions over an exchange matrix or a triangulation.

use mutwb_core::typea::{self, Diagonal, FlipMove, Triangulation};
use mutwb_core::{cokernel, AbelianGroupDescriptor, Error, ExchangeMatrix, Quiver};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum MoveError {
    #[error("flip needs a triangulation-backed session")]
    FlipOnMatrix,
    #[error(transparent)]
    Core(#[from] Error),
}

pub type Result<T, E = MoveError> = std::result::Result<T, E>;

/// The object a session starts from and evolves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Seed {
    Matrix(ExchangeMatrix),
    Triangulation(Triangulation),
}

impl Seed {
    /// Exchange matrix; for a triangulation, in canonical diagonal order.
    pub fn exchange_matrix(&self) -> ExchangeMatrix {
        match self {
            Seed::Matrix(b) => b.clone(),
            Seed::Triangulation(t) => t.exchange_matrix(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Seed::Matrix(_) => "matrix",
            Seed::Triangulation(_) => "triangulation",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Move {
    Mutate(usize),
    Flip(FlipMove),
}

/// Applies one move. On a triangulation, mutating at `k` flips the `k`-th
/// diagonal in canonical order.
pub fn apply(seed: &Seed, mv: Move) -> Result<(Seed, Move)> {
    match (seed, mv) {
        (Seed::Matrix(b), Move::Mutate(k)) => Ok((Seed::Matrix(b.fz_mutate(k)?), mv)),
        (Seed::Triangulation(t), Move::Mutate(k)) => {
            let d = *t.diagonals().get(k).ok_or(Error::IndexOutOfRange {
                index: k,
                len: t.diagonals().len(),
            })?;
            let (next, flip) = typea::flip(t, d)?;
            Ok((Seed::Triangulation(next), Move::Flip(flip)))
        }
        (Seed::Triangulation(t), Move::Flip(f)) => {
            let (next, flip) = typea::flip(t, f.removed)?;
            Ok((Seed::Triangulation(next), Move::Flip(flip)))
        }
        (Seed::Matrix(_), Move::Flip(_)) => Err(MoveError::FlipOnMatrix),
    }
}

#[derive(Debug, Clone)]
pub struct Session {
    initial: Seed,
    current: Seed,
    history: Vec<Move>,
}

impl Session {
    pub fn new(seed: Seed) -> Self {
        Self {
            initial: seed.clone(),
            current: seed,
            history: Vec::new(),
        }
    }

    pub fn current(&self) -> &Seed {
        &self.current
    }

    pub fn history(&self) -> &[Move] {
        &self.history
    }

    pub fn mutate(&mut self, k: usize) -> Result<()> {
        self.push(Move::Mutate(k))
    }

    pub fn flip(&mut self, d: Diagonal) -> Result<()> {
        // the inserted diagonal is recomputed by `apply`
        self.push(Move::Flip(FlipMove {
            removed: d,
            inserted: d,
        }))
    }

    fn push(&mut self, mv: Move) -> Result<()> {
        let (next, recorded) = apply(&self.current, mv)?;
        self.current = next;
        self.history.push(recorded);
        Ok(())
    }

    /// Drops the last move and rebuilds the state from the initial object.
    pub fn undo(&mut self) -> Option<Move> {
        let last = self.history.pop()?;
        self.current = replay(&self.initial, &self.history).expect("recorded moves replay");
        Some(last)
    }

    pub fn view(&self, id: u64) -> SessionView {
        let b = self.current.exchange_matrix();
        let k0 = cokernel(b.matrix());
        SessionView {
            id: id.to_string(),
            kind: self.current.kind(),
            current: self.current.clone(),
            quiver: b.to_quiver(),
            k0: k0.to_string(),
            k0_descriptor: k0,
            b,
            history: self.history.clone(),
        }
    }
}

pub fn replay(initial: &Seed, moves: &[Move]) -> Result<Seed> {
    moves
        .iter()
        .try_fold(initial.clone(), |seed, &mv| Ok(apply(&seed, mv)?.0))
}

/// Everything a client needs to render a session.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SessionView {
    pub id: String,
    pub kind: &'static str,
    pub current: Seed,
    pub quiver: Quiver,
    pub b: ExchangeMatrix,
    pub k0: String,
    pub k0_descriptor: AbelianGroupDescriptor,
    pub history: Vec<Move>,
}
