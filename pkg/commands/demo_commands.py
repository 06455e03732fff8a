import click

from coend import DEMOS, run_demo
from commands.session import Session, emit_report, handles_input_errors, pass_session


@click.command(name="demo")
@click.argument("name", type=click.Choice(sorted(DEMOS)))
@pass_session
@handles_input_errors
def demo(session: Session, name: str):
    """Run a named end-to-end scenario and exit with its suite status"""
    report = run_demo(name, session.field, session.paranoid)
    emit_report(session, report, f"demo {name}")
