//! Terminal front end: board rendering, command parsing and the interactive
//! `play` and `replay` loops. Everything takes explicit reader and writer
//! handles so it can run without a terminal.

use std::cell::RefCell;
use std::io::{BufRead, Write};
use std::rc::Rc;

use tictactoe::ai::ComputerPlayer;
use tictactoe::game_loop::{run_game_loop, Action, InputSource, LoopEvent, Prompt};
use tictactoe::{check_result, GameSession, Mark, Mode, Navigation};

pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const BAD_SAVE_FILE: i32 = 2;
    pub const BIND_FAILURE: i32 = 3;
}

/// Board with row and column headers, `.` for empty cells.
pub fn render_board(session: &GameSession) -> String {
    let board = session.view_board();
    let mut out = String::from("   0 1 2\n");
    for (row, chunk) in board.cells().chunks(3).enumerate() {
        out.push_str(&row.to_string());
        out.push(' ');
        for cell in chunk {
            out.push(' ');
            out.push(cell.mark().map_or('.', Mark::as_char));
        }
        out.push('\n');
    }
    out
}

/// Board plus every counter and the status line.
pub fn render(session: &GameSession) -> String {
    let stats = session.stats();
    let next = session
        .next_player()
        .map_or_else(|| "-".to_owned(), |m| m.to_string());
    let mut out = render_board(session);
    out.push_str(&format!(
        "mode: {}  leadPlayer: {}  nextPlayer: {}  movesCount: {}\n",
        session.mode(),
        session.lead_player(),
        next,
        session.moves_count()
    ));
    out.push_str(&format!(
        "xWinCount: {}  oWinCount: {}  drawCount: {}\n",
        stats.x_win_count, stats.o_win_count, stats.draw_count
    ));
    if session.at_latest_state() {
        out.push_str(&format!("status: {}\n", session.status()));
    } else {
        let viewed = check_result(&session.view_board());
        out.push_str(&format!(
            "status: {} (viewing move {} of {})\n",
            viewed.status(),
            session.cursor(),
            session.moves_count()
        ));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Move(usize, usize),
    Step,
    Navigate(Navigation),
    Initialize,
    SetUp(Option<Mode>, Option<Mark>),
    Quit,
    Help,
}

pub const HELP: &str = "commands: <row> <col> | < | > | << | >> | init | setup [MODE] [x|o] | move | quit";

pub fn parse_command(line: &str) -> Result<Command, String> {
    let words: Vec<&str> = line.split_whitespace().collect();
    match words.as_slice() {
        [] | ["move"] => Ok(Command::Step),
        ["<"] => Ok(Command::Navigate(Navigation::Previous)),
        [">"] => Ok(Command::Navigate(Navigation::Next)),
        ["<<"] => Ok(Command::Navigate(Navigation::First)),
        [">>"] => Ok(Command::Navigate(Navigation::Last)),
        ["init"] => Ok(Command::Initialize),
        ["quit"] | ["stop"] | ["exit"] => Ok(Command::Quit),
        ["help"] | ["?"] => Ok(Command::Help),
        ["setup", rest @ ..] if rest.len() <= 2 => {
            let mut mode = None;
            let mut lead = None;
            for w in rest {
                if let Ok(m) = w.parse::<Mode>() {
                    mode = Some(m);
                } else if let Ok(m) = w.parse::<Mark>() {
                    lead = Some(m);
                } else {
                    return Err(format!("setup: unknown value {w:?}"));
                }
            }
            Ok(Command::SetUp(mode, lead))
        }
        [r, c] => {
            let coord = |s: &str| s.parse::<usize>().map_err(|_| format!("not a row/column: {s:?}"));
            let (row, col) = (coord(r)?, coord(c)?);
            if row > 2 || col > 2 {
                return Err(format!(
                    "({row}, {col}) is off the board; rows and columns are 0, 1 or 2"
                ));
            }
            Ok(Command::Move(row, col))
        }
        _ => Err(format!("unknown command {:?}; {HELP}", line.trim())),
    }
}

/// Reads commands from a terminal-like reader. Computer turns are stepped
/// automatically unless both seats are computers, in which case an empty
/// line (or `move`) steps one ply.
struct TerminalInput<R, W> {
    reader: R,
    out: Rc<RefCell<W>>,
}

impl<R: BufRead, W: Write> TerminalInput<R, W> {
    fn read_line(&mut self) -> Option<String> {
        let mut line = String::new();
        match self.reader.read_line(&mut line) {
            Ok(0) | Err(_) => None,
            Ok(_) => Some(line),
        }
    }

    fn say(&self, text: &str) {
        let _ = writeln!(self.out.borrow_mut(), "{text}");
    }
}

impl<R: BufRead, W: Write> InputSource for TerminalInput<R, W> {
    fn next_action(&mut self, session: &GameSession, prompt: Prompt) -> Action {
        if matches!(prompt, Prompt::ComputerTurn(_)) && session.mode() != Mode::C2C {
            return Action::Step;
        }
        self.say(&render(session));
        loop {
            let hint = match prompt {
                Prompt::HumanTurn(m) => format!("{m} to move"),
                Prompt::ComputerTurn(m) => format!("{m} (computer) to move, enter to step"),
                Prompt::Reviewing => "reviewing history".to_owned(),
            };
            {
                let mut out = self.out.borrow_mut();
                let _ = write!(out, "{hint}> ");
                let _ = out.flush();
            }
            let Some(line) = self.read_line() else {
                return Action::Stop;
            };
            match parse_command(&line) {
                Ok(Command::Move(row, col)) => return Action::Move { row, col },
                Ok(Command::Step) => {
                    if line.trim().is_empty() && !matches!(prompt, Prompt::ComputerTurn(_)) {
                        continue;
                    }
                    return Action::Step;
                }
                Ok(Command::Navigate(n)) => return Action::Navigate(n),
                Ok(Command::Initialize) => return Action::Initialize,
                Ok(Command::SetUp(mode, lead)) => {
                    return Action::SetUp {
                        mode: mode.unwrap_or(session.mode()),
                        lead: lead.unwrap_or(session.lead_player()),
                    }
                }
                Ok(Command::Quit) => return Action::Stop,
                Ok(Command::Help) => self.say(HELP),
                Err(e) => self.say(&e),
            }
        }
    }
}

fn describe(session: &GameSession, event: &LoopEvent) -> Option<String> {
    match event {
        LoopEvent::Moved { mv, .. } => Some(format!("{} plays ({}, {})", mv.mark, mv.row, mv.col)),
        LoopEvent::GameFinished { result, .. } => {
            Some(format!("{}game over: {}", render(session), result.status()))
        }
        LoopEvent::NewGame => Some("new game".to_owned()),
        LoopEvent::SetUp => Some(format!(
            "set up: mode {} lead {}",
            session.mode(),
            session.lead_player()
        )),
        LoopEvent::Navigated(_) => None,
        LoopEvent::Rejected(e) => Some(format!("rejected: {e}")),
        LoopEvent::Stopped(stats) => Some(format!(
            "final stats: xWinCount {} oWinCount {} drawCount {}",
            stats.x_win_count, stats.o_win_count, stats.draw_count
        )),
    }
}

/// Interactive play. Returns the process exit code.
pub fn play<R: BufRead, W: Write>(
    mode: Mode,
    lead: Mark,
    reader: R,
    writer: W,
    computer: &mut dyn ComputerPlayer,
) -> i32 {
    let out = Rc::new(RefCell::new(writer));
    let mut input = TerminalInput {
        reader,
        out: Rc::clone(&out),
    };
    run_game_loop(
        GameSession::new(mode, lead),
        &mut input,
        computer,
        |session, event| {
            if let Some(text) = describe(session, event) {
                let _ = writeln!(out.borrow_mut(), "{text}");
            }
        },
    );
    exit::SUCCESS
}

/// Read-only walk through a saved game set: navigation commands only.
pub fn replay<R: BufRead, W: Write>(mut session: GameSession, mut reader: R, mut out: W) -> i32 {
    let _ = write!(out, "{}", render(&session));
    loop {
        let _ = write!(out, "replay> ");
        let _ = out.flush();
        let mut line = String::new();
        match reader.read_line(&mut line) {
            Ok(0) | Err(_) => break,
            Ok(_) => {}
        }
        if line.trim().is_empty() {
            continue;
        }
        match parse_command(&line) {
            Ok(Command::Navigate(n)) => match session.navigate(n) {
                Ok(()) => {
                    let _ = write!(out, "{}", render(&session));
                }
                Err(e) => {
                    let _ = writeln!(out, "rejected: {e}");
                }
            },
            Ok(Command::Quit) => break,
            Ok(Command::Help) => {
                let _ = writeln!(out, "commands: < | > | << | >> | quit");
            }
            Ok(_) => {
                let _ = writeln!(out, "replay is read-only: only < > << >> and quit are available");
            }
            Err(e) => {
                let _ = writeln!(out, "{e}");
            }
        }
    }
    exit::SUCCESS
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commands() {
        assert_eq!(parse_command("1 2\n"), Ok(Command::Move(1, 2)));
        assert_eq!(parse_command("<<"), Ok(Command::Navigate(Navigation::First)));
        assert_eq!(parse_command(">"), Ok(Command::Navigate(Navigation::Next)));
        assert_eq!(parse_command(""), Ok(Command::Step));
        assert_eq!(
            parse_command("setup C2H o"),
            Ok(Command::SetUp(Some(Mode::C2H), Some(Mark::O)))
        );
        assert_eq!(parse_command("setup"), Ok(Command::SetUp(None, None)));
        assert_eq!(parse_command("quit"), Ok(Command::Quit));
        assert!(parse_command("5 5").unwrap_err().contains("off the board"));
        assert!(parse_command("a b").is_err());
        assert!(parse_command("setup Z2Z").is_err());
        assert!(parse_command("jump").is_err());
    }

    #[test]
    fn render_is_a_function_of_the_session() {
        let mut s = GameSession::new(Mode::H2C, Mark::X);
        s.play_move(1, 1).unwrap();
        s.play_move(0, 0).unwrap();
        let text = render(&s);
        assert!(
            text.starts_with("   0 1 2\n0  o . .\n1  . x .\n2  . . .\n"),
            "{text}"
        );
        assert!(text.contains("mode: H2C  leadPlayer: x  nextPlayer: x  movesCount: 2"));
        assert!(text.contains("xWinCount: 0  oWinCount: 0  drawCount: 0"));
        assert!(text.contains("status: Continue"));
        assert_eq!(text, render(&s.clone()));
        s.move_to_previous_state().unwrap();
        assert!(render(&s).contains("viewing move 1 of 2"));
    }
}
