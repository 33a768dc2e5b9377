//! Exhaustive walks of the game tree built on the rules module.

use std::collections::HashSet;

use crate::rules::{apply_move, check_result, empty_board, legal_moves, Board, GameResult, Mark, Move};

/// Totals over every distinct complete game (sequence of moves).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GameCounts {
    pub total: u64,
    pub x_wins: u64,
    pub o_wins: u64,
    pub draws: u64,
}

/// Counts all complete games from the empty board with `lead` moving first.
pub fn count_games(lead: Mark) -> GameCounts {
    let mut counts = GameCounts::default();
    walk(&empty_board(), lead, &mut counts);
    counts
}

fn walk(board: &Board, to_move: Mark, counts: &mut GameCounts) {
    let result = check_result(board);
    if result.is_over() {
        counts.total += 1;
        match result {
            GameResult::XWins => counts.x_wins += 1,
            GameResult::OWins => counts.o_wins += 1,
            _ => counts.draws += 1,
        }
        return;
    }
    for (row, col) in legal_moves(board) {
        let next = apply_move(board, Move::new(to_move, row, col)).expect("legal move");
        walk(&next, to_move.other(), counts);
    }
}

/// Every distinct board reachable by legal play from empty with `lead`
/// first, paired with the side to move on it.
pub fn reachable_positions(lead: Mark) -> Vec<(Board, Mark)> {
    let mut seen = HashSet::new();
    let mut order = Vec::new();
    let mut stack = vec![(empty_board(), lead)];
    while let Some((board, to_move)) = stack.pop() {
        if !seen.insert(board) {
            continue;
        }
        order.push((board, to_move));
        if check_result(&board).is_over() {
            continue;
        }
        for (row, col) in legal_moves(&board) {
            let next = apply_move(&board, Move::new(to_move, row, col)).expect("legal move");
            stack.push((next, to_move.other()));
        }
    }
    order
}
