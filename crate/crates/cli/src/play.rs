//! Console game against the solved table. The engine always plays the
//! lexicographically least optimal move.

use copthrottle::game::{best_placement, PlacementMode, SolvedGame};
use copthrottle::{CopConfig, GameState, GameValue};
use std::io::{self, BufRead, Write};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Human {
    Robber,
    Cops,
}

enum Input {
    Move(Vec<usize>),
    Hint,
    Value,
    Quit,
}

fn parse_input(line: &str) -> Option<Input> {
    let mut words = line.split_whitespace();
    let head = words.next()?;
    let numbers = |it: &mut dyn Iterator<Item = &str>| -> Option<Vec<usize>> {
        it.flat_map(|w| w.split(',')).filter(|w| !w.is_empty()).map(|w| w.parse().ok()).collect()
    };
    match head {
        "hint" | "h" => Some(Input::Hint),
        "value" | "v" => Some(Input::Value),
        "quit" | "q" | "exit" => Some(Input::Quit),
        "move" | "m" => numbers(&mut words).filter(|v| !v.is_empty()).map(Input::Move),
        _ => numbers(&mut std::iter::once(head).chain(words)).map(Input::Move),
    }
}

fn show(v: GameValue) -> String {
    match v {
        GameValue::Finite(t) => format!("capture in {t} more round(s) under optimal play"),
        GameValue::RobberWins => "the robber evades forever under optimal play".into(),
    }
}

struct Console<R, W> {
    input: R,
    out: W,
}

impl<R: BufRead, W: Write> Console<R, W> {
    /// Next command, or `None` at end of input.
    fn read(&mut self, prompt: &str) -> io::Result<Option<Input>> {
        loop {
            write!(self.out, "{prompt}> ")?;
            self.out.flush()?;
            let mut line = String::new();
            if self.input.read_line(&mut line)? == 0 {
                writeln!(self.out)?;
                return Ok(None);
            }
            if line.trim().is_empty() {
                continue;
            }
            match parse_input(&line) {
                Some(cmd) => return Ok(Some(cmd)),
                None => writeln!(self.out, "commands: move <v...> | hint | value | quit")?,
            }
        }
    }
}

/// Runs one game on stdin-like input until capture, `quit` or end of input.
pub fn run<R: BufRead, W: Write>(table: &SolvedGame, human: Human, input: R, out: W) -> io::Result<()> {
    let g = table.graph();
    let k = table.k();
    let mut con = Console { input, out };
    writeln!(con.out, "graph on {} vertices, {} edge(s), {k} cop(s)", g.n(), g.m())?;
    let fmt_list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");

    // Placement.
    let cops: CopConfig = match human {
        Human::Robber => {
            let (_, s) = best_placement(table, PlacementMode::Multisets).expect("k >= 1");
            writeln!(con.out, "cops start on {s}")?;
            s
        }
        Human::Cops => loop {
            match con.read(&format!("place {k} cop(s)"))? {
                None | Some(Input::Quit) => return Ok(()),
                Some(Input::Hint) => {
                    let (v, s) = best_placement(table, PlacementMode::Multisets).expect("k >= 1");
                    writeln!(con.out, "hint: place on {s} ({})", show(v))?;
                }
                Some(Input::Value) => writeln!(con.out, "no position yet")?,
                Some(Input::Move(v)) => {
                    if v.len() != k || v.iter().any(|&x| x >= g.n()) {
                        writeln!(con.out, "illegal: give {k} vertices in 0..{}", g.n())?;
                        continue;
                    }
                    break CopConfig::new(v).expect("k >= 1");
                }
            }
        },
    };
    let robber = match human {
        Human::Cops => {
            let r = table.best_robber_start(&cops).expect("placement is in the table");
            writeln!(con.out, "robber starts on {r}")?;
            r
        }
        Human::Robber => loop {
            match con.read("choose a start vertex")? {
                None | Some(Input::Quit) => return Ok(()),
                Some(Input::Hint) => {
                    let r = table.best_robber_start(&cops).expect("placement is in the table");
                    writeln!(con.out, "hint: start on {r}")?;
                }
                Some(Input::Value) => {
                    let v = table.capture_time(&cops).expect("placement is in the table");
                    writeln!(con.out, "{}", show(v))?;
                }
                Some(Input::Move(v)) if v.len() == 1 && v[0] < g.n() => break v[0],
                Some(Input::Move(_)) => writeln!(con.out, "illegal: give one vertex in 0..{}", g.n())?,
            }
        },
    };
    let mut state = GameState { cops, robber };
    let mut round = 0u32;
    loop {
        if state.is_terminal() {
            writeln!(con.out, "captured after round {round}")?;
            return Ok(());
        }
        round += 1;
        // Cop half-move.
        let next = match human {
            Human::Robber => {
                let m = table.optimal_cop_moves(&state).expect("state is in the table");
                m[0].clone()
            }
            Human::Cops => loop {
                let legal = table.cop_moves(&state.cops).expect("state is in the table");
                match con.read(&format!("round {round}, cops {} robber {}", state.cops, state.robber))? {
                    None | Some(Input::Quit) => return Ok(()),
                    Some(Input::Hint) => {
                        let m = table.optimal_cop_moves(&state).expect("state is in the table");
                        writeln!(con.out, "hint: move to {}", m[0])?;
                    }
                    Some(Input::Value) => {
                        writeln!(con.out, "{}", show(table.value(&state).expect("state is in the table")))?;
                    }
                    Some(Input::Move(v)) => match CopConfig::new(v) {
                        Ok(c) if legal.contains(&c) => break c,
                        _ => {
                            let all: Vec<String> = legal.iter().map(|c| format!("[{c}]")).collect();
                            writeln!(con.out, "illegal move; legal: {}", all.join(" "))?;
                        }
                    },
                }
            },
        };
        writeln!(con.out, "round {round}: cops move to {next}")?;
        state.cops = next;
        if state.is_terminal() {
            writeln!(con.out, "captured after round {round}")?;
            return Ok(());
        }
        // Robber half-move.
        let r = match human {
            Human::Cops => table.optimal_robber_moves(&state).expect("state is in the table")[0],
            Human::Robber => loop {
                let mut legal = g.closed_neighborhood(state.robber);
                legal.sort_unstable();
                match con.read(&format!("round {round}, cops {} robber {}", state.cops, state.robber))? {
                    None | Some(Input::Quit) => return Ok(()),
                    Some(Input::Hint) => {
                        let m = table.optimal_robber_moves(&state).expect("state is in the table");
                        writeln!(con.out, "hint: move to {}", m[0])?;
                    }
                    Some(Input::Value) => {
                        let v = table
                            .robber_to_move_value(&state.cops, state.robber)
                            .expect("state is in the table");
                        writeln!(con.out, "{}", show(v))?;
                    }
                    Some(Input::Move(v)) if v.len() == 1 && legal.contains(&v[0]) => break v[0],
                    Some(Input::Move(_)) => writeln!(con.out, "illegal move; legal: {}", fmt_list(&legal))?,
                }
            },
        };
        writeln!(con.out, "round {round}: robber moves to {r}")?;
        state.robber = r;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use copthrottle::game::solve;
    use copthrottle::{Budget, Graph};

    fn play(g: &Graph, k: usize, human: Human, script: &str) -> String {
        let table = solve(g, k, Budget::default()).unwrap();
        let mut out = Vec::new();
        run(&table, human, script.as_bytes(), &mut out).unwrap();
        String::from_utf8(out).unwrap()
    }

    #[test]
    fn robber_on_a_path_is_caught() {
        let p5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let out = play(&p5, 1, Human::Robber, "0\n0\n0\n");
        assert!(out.contains("cops start on 2"), "{out}");
        assert!(out.contains("captured after round 2"), "{out}");
    }

    #[test]
    fn illegal_robber_move_lists_options() {
        let p5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let out = play(&p5, 1, Human::Robber, "4\n1\nquit\n");
        assert!(out.contains("illegal move; legal: 3 4"), "{out}");
    }

    #[test]
    fn cycle_robber_evades_a_single_cop() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let out = play(&c4, 1, Human::Cops, "value\n0\nvalue\n1\n2\nquit\n");
        assert!(out.contains("robber starts on 2"), "{out}");
        assert!(out.contains("evades forever"), "{out}");
        assert!(!out.contains("captured"), "{out}");
    }
}
