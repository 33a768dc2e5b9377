//! Rules of the game: marks, the 3x3 board, moves and result detection.
//!
//! Everything here is a plain value. [`apply_move`] returns a new board and
//! leaves its input untouched, so callers can keep earlier positions around.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Side length of the board.
pub const SIZE: usize = 3;

/// The eight winning lines as cell indices in row-major order.
pub const LINES: [[usize; 3]; 8] = [
    // rows
    [0, 1, 2],
    [3, 4, 5],
    [6, 7, 8],
    // columns
    [0, 3, 6],
    [1, 4, 7],
    [2, 5, 8],
    // diagonals
    [0, 4, 8],
    [2, 4, 6],
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RulesError {
    #[error("cell ({row}, {col}) is already occupied")]
    CellOccupied { row: usize, col: usize },
    #[error("cell ({row}, {col}) is outside the 3x3 board")]
    OutOfRange { row: usize, col: usize },
    #[error("malformed move tuple {0:?}, expected [xo][0-2][0-2]")]
    MalformedTuple(String),
}

impl RulesError {
    /// Machine-readable name of the error.
    pub fn code(&self) -> &'static str {
        match self {
            RulesError::CellOccupied { .. } => "CellOccupied",
            RulesError::OutOfRange { .. } => "OutOfRange",
            RulesError::MalformedTuple(_) => "MalformedTuple",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mark {
    X,
    O,
}

impl Mark {
    pub const ALL: [Mark; 2] = [Mark::X, Mark::O];

    pub fn other(self) -> Mark {
        match self {
            Mark::X => Mark::O,
            Mark::O => Mark::X,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Mark::X => 'x',
            Mark::O => 'o',
        }
    }

    pub fn from_char(c: char) -> Option<Mark> {
        match c {
            'x' => Some(Mark::X),
            'o' => Some(Mark::O),
            _ => None,
        }
    }
}

impl fmt::Display for Mark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl FromStr for Mark {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Mark::from_char(c).ok_or_else(|| format!("unknown mark {s:?}")),
            _ => Err(format!("unknown mark {s:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Cell {
    #[default]
    Empty,
    Marked(Mark),
}

impl Cell {
    pub fn mark(self) -> Option<Mark> {
        match self {
            Cell::Empty => None,
            Cell::Marked(m) => Some(m),
        }
    }

    pub fn is_empty(self) -> bool {
        self == Cell::Empty
    }
}

/// A 3x3 board stored row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Board {
    cells: [Cell; 9],
}

impl Board {
    pub fn from_cells(cells: [Cell; 9]) -> Board {
        Board { cells }
    }

    /// Parses nine characters (`x`, `o`, `.`) in row-major order. Whitespace
    /// and `/` separators are ignored, so `"xox/xoo/oxx"` works.
    pub fn parse(text: &str) -> Option<Board> {
        let mut cells = [Cell::Empty; 9];
        let mut n = 0;
        for c in text.chars().filter(|c| !c.is_whitespace() && *c != '/') {
            if n == 9 {
                return None;
            }
            cells[n] = match c {
                '.' | '_' => Cell::Empty,
                other => Cell::Marked(Mark::from_char(other)?),
            };
            n += 1;
        }
        (n == 9).then_some(Board { cells })
    }

    pub fn cells(&self) -> &[Cell; 9] {
        &self.cells
    }

    /// Returns `None` when the coordinates are off the board.
    pub fn get(&self, row: usize, col: usize) -> Option<Cell> {
        (row < SIZE && col < SIZE).then(|| self.cells[row * SIZE + col])
    }

    pub fn count(&self, mark: Mark) -> usize {
        self.cells.iter().filter(|c| **c == Cell::Marked(mark)).count()
    }

    pub fn marked_count(&self) -> usize {
        self.cells.iter().filter(|c| !c.is_empty()).count()
    }

    pub fn is_full(&self) -> bool {
        self.cells.iter().all(|c| !c.is_empty())
    }

    /// Whether this board could occur in play started by `lead`.
    pub fn satisfies_parity(&self, lead: Mark) -> bool {
        let lead_count = self.count(lead);
        let other_count = self.count(lead.other());
        lead_count == other_count || lead_count == other_count + 1
    }
}

impl fmt::Display for Board {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (row, chunk) in self.cells.chunks(SIZE).enumerate() {
            if row > 0 {
                f.write_str("/")?;
            }
            for cell in chunk {
                let c = cell.mark().map_or('.', Mark::as_char);
                write!(f, "{c}")?;
            }
        }
        Ok(())
    }
}

/// A mark placed at (row, col). Coordinates are checked when the move is
/// applied or decoded, not on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Move {
    pub mark: Mark,
    pub row: usize,
    pub col: usize,
}

impl Move {
    pub fn new(mark: Mark, row: usize, col: usize) -> Move {
        Move { mark, row, col }
    }

    pub fn in_range(&self) -> bool {
        self.row < SIZE && self.col < SIZE
    }

    /// Three-character tuple such as `x00`.
    pub fn encode(&self) -> String {
        self.to_string()
    }

    pub fn decode(text: &str) -> Result<Move, RulesError> {
        let malformed = || RulesError::MalformedTuple(text.to_owned());
        let bytes = text.as_bytes();
        if bytes.len() != 3 {
            return Err(malformed());
        }
        let mark = Mark::from_char(bytes[0] as char).ok_or_else(malformed)?;
        let digit = |b: u8| match b {
            b'0'..=b'2' => Ok((b - b'0') as usize),
            _ => Err(malformed()),
        };
        Ok(Move::new(mark, digit(bytes[1])?, digit(bytes[2])?))
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.mark, self.row, self.col)
    }
}

impl FromStr for Move {
    type Err = RulesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Move::decode(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GameResult {
    Continue,
    XWins,
    OWins,
    Draw,
}

impl GameResult {
    pub fn code(self) -> char {
        match self {
            GameResult::Continue => 'c',
            GameResult::XWins => 'x',
            GameResult::OWins => 'o',
            GameResult::Draw => 'd',
        }
    }

    pub fn from_code(c: char) -> Option<GameResult> {
        match c {
            'c' => Some(GameResult::Continue),
            'x' => Some(GameResult::XWins),
            'o' => Some(GameResult::OWins),
            'd' => Some(GameResult::Draw),
            _ => None,
        }
    }

    pub fn win_for(mark: Mark) -> GameResult {
        match mark {
            Mark::X => GameResult::XWins,
            Mark::O => GameResult::OWins,
        }
    }

    pub fn winner(self) -> Option<Mark> {
        match self {
            GameResult::XWins => Some(Mark::X),
            GameResult::OWins => Some(Mark::O),
            _ => None,
        }
    }

    pub fn is_over(self) -> bool {
        self != GameResult::Continue
    }

    /// Status line shown to players.
    pub fn status(self) -> &'static str {
        match self {
            GameResult::Continue => "Continue",
            GameResult::XWins => "x Won",
            GameResult::OWins => "o Won",
            GameResult::Draw => "Draw",
        }
    }
}

pub fn empty_board() -> Board {
    Board::default()
}

/// Coordinates of every empty cell, row-major.
pub fn legal_moves(board: &Board) -> Vec<(usize, usize)> {
    board
        .cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_empty())
        .map(|(i, _)| (i / SIZE, i % SIZE))
        .collect()
}

pub fn apply_move(board: &Board, mv: Move) -> Result<Board, RulesError> {
    if !mv.in_range() {
        return Err(RulesError::OutOfRange {
            row: mv.row,
            col: mv.col,
        });
    }
    let idx = mv.row * SIZE + mv.col;
    if !board.cells[idx].is_empty() {
        return Err(RulesError::CellOccupied {
            row: mv.row,
            col: mv.col,
        });
    }
    let mut next = *board;
    next.cells[idx] = Cell::Marked(mv.mark);
    Ok(next)
}

/// Result of a board reachable by legal play. Boards with two winners are
/// outside the domain; the first completed line in [`LINES`] order wins.
pub fn check_result(board: &Board) -> GameResult {
    for [a, b, c] in LINES {
        if let Cell::Marked(m) = board.cells[a] {
            if board.cells[b] == board.cells[a] && board.cells[c] == board.cells[a] {
                return GameResult::win_for(m);
            }
        }
    }
    if board.is_full() {
        GameResult::Draw
    } else {
        GameResult::Continue
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn board(text: &str) -> Board {
        Board::parse(text).unwrap()
    }

    /// Independent scanner: checks every index triple with constant row,
    /// constant column, or lying on one of the two diagonals.
    fn scan_result(board: &Board) -> Vec<Mark> {
        let at = |r: usize, c: usize| board.get(r, c).unwrap().mark();
        let mut winners = Vec::new();
        let mut triples: Vec<[(usize, usize); 3]> = Vec::new();
        for k in 0..3 {
            triples.push([(k, 0), (k, 1), (k, 2)]);
            triples.push([(0, k), (1, k), (2, k)]);
        }
        triples.push([(0, 0), (1, 1), (2, 2)]);
        triples.push([(0, 2), (1, 1), (2, 0)]);
        for t in triples {
            let marks: Vec<_> = t.iter().map(|&(r, c)| at(r, c)).collect();
            if let Some(m) = marks[0] {
                if marks.iter().all(|x| *x == Some(m)) && !winners.contains(&m) {
                    winners.push(m);
                }
            }
        }
        winners
    }

    #[test]
    fn other_mark() {
        assert_eq!(Mark::X.other(), Mark::O);
        assert_eq!(Mark::O.other(), Mark::X);
    }

    #[test]
    fn empty_board_is_blank_and_open() {
        let b = empty_board();
        assert_eq!((b.count(Mark::X), b.count(Mark::O)), (0, 0));
        assert_eq!(check_result(&b), GameResult::Continue);
        let moves = legal_moves(&b);
        assert_eq!(moves.len(), 9);
        assert_eq!(moves[0], (0, 0));
        assert_eq!(moves[8], (2, 2));
    }

    #[test]
    fn legal_moves_skip_marked_cells() {
        let b = apply_move(&empty_board(), Move::new(Mark::X, 1, 1)).unwrap();
        let b = apply_move(&b, Move::new(Mark::O, 0, 0)).unwrap();
        let moves = legal_moves(&b);
        assert_eq!(moves.len(), 7);
        assert!(!moves.contains(&(1, 1)) && !moves.contains(&(0, 0)));
        assert!(legal_moves(&board("xox/xoo/oxx")).is_empty());
    }

    #[test]
    fn apply_move_is_pure() {
        let before = empty_board();
        let after = apply_move(&before, Move::new(Mark::X, 1, 1)).unwrap();
        assert_eq!(before, empty_board());
        assert_eq!(after, board(".../.x./..."));
        assert_eq!(after.marked_count(), 1);
    }

    #[test]
    fn apply_move_errors() {
        let b = board(".../.x./...");
        assert_eq!(
            apply_move(&b, Move::new(Mark::X, 1, 1)),
            Err(RulesError::CellOccupied { row: 1, col: 1 })
        );
        assert_eq!(
            apply_move(&empty_board(), Move::new(Mark::X, 3, 0)),
            Err(RulesError::OutOfRange { row: 3, col: 0 })
        );
    }

    #[test]
    fn check_result_cases() {
        assert_eq!(check_result(&board("xoo/.x./..x")), GameResult::XWins);
        assert_eq!(check_result(&board("xox/xoo/oxx")), GameResult::Draw);
        assert!(scan_result(&board("xox/xoo/oxx")).is_empty());
        assert_eq!(check_result(&board("x.x/ooo/x.x")), GameResult::OWins);
        assert_eq!(check_result(&board("..o/.o./o..")), GameResult::OWins);
        assert_eq!(check_result(&board("x../x../x..")), GameResult::XWins);
        // full board with a winner is a win, not a draw
        assert_eq!(check_result(&board("xxx/oox/oxo")), GameResult::XWins);
    }

    #[test]
    fn result_codes_round_trip() {
        for r in [
            GameResult::Continue,
            GameResult::XWins,
            GameResult::OWins,
            GameResult::Draw,
        ] {
            assert_eq!(GameResult::from_code(r.code()), Some(r));
        }
        assert_eq!(GameResult::XWins.status(), "x Won");
        assert_eq!(GameResult::OWins.status(), "o Won");
        assert_eq!(GameResult::Draw.status(), "Draw");
    }

    #[test]
    fn move_encoding() {
        assert_eq!(Move::new(Mark::X, 0, 0).encode(), "x00");
        assert_eq!(Move::decode("o01"), Ok(Move::new(Mark::O, 0, 1)));
        for bad in ["z12", "x3", "x30", "x001", "", "X00", "o-1", "oé"] {
            assert!(
                matches!(Move::decode(bad), Err(RulesError::MalformedTuple(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn all_valid_moves_round_trip() {
        let mut n = 0;
        for mark in Mark::ALL {
            for row in 0..3 {
                for col in 0..3 {
                    let m = Move::new(mark, row, col);
                    assert_eq!(Move::decode(&m.encode()), Ok(m));
                    n += 1;
                }
            }
        }
        assert_eq!(n, 18);
    }

    #[test]
    fn check_result_matches_scanner_on_all_parity_boards() {
        let mut checked = 0;
        for code in 0..3usize.pow(9) {
            let mut cells = [Cell::Empty; 9];
            let mut rest = code;
            for cell in cells.iter_mut() {
                *cell = match rest % 3 {
                    0 => Cell::Empty,
                    1 => Cell::Marked(Mark::X),
                    _ => Cell::Marked(Mark::O),
                };
                rest /= 3;
            }
            let b = Board::from_cells(cells);
            if !Mark::ALL.iter().any(|&lead| b.satisfies_parity(lead)) {
                continue;
            }
            let winners = scan_result(&b);
            if winners.len() > 1 {
                // two winners cannot arise in play; excluded by precondition
                continue;
            }
            let expected = match winners.first() {
                Some(&m) => GameResult::win_for(m),
                None if b.is_full() => GameResult::Draw,
                None => GameResult::Continue,
            };
            assert_eq!(check_result(&b), expected, "{b}");
            checked += 1;
        }
        assert!(checked > 5478);
    }

    #[test]
    fn board_display_parse() {
        let b = board("xo./.x./..o");
        assert_eq!(b.to_string(), "xo./.x./..o");
        assert!(Board::parse("xo").is_none());
        assert!(Board::parse("xxxxxxxxxx").is_none());
    }
}
