import asyncio

from weylfusion.database import SQLiteDatabase
from weylfusion.utils.report import CheckResult, Report


def make_report(command="dim", passed=True):
    report = Report(command, {"rank": 2, "weight": [1, 1]}, payload={"enumerated": 9})
    report.add_check(CheckResult("dimension", passed, counterexample=None if passed else "écart"))
    report.wall_time = 0.25
    return report


def with_database(path, scenario):
    async def run():
        db = SQLiteDatabase(path)
        await db.init()
        try:
            return await scenario(db)
        finally:
            await db.close()
    return asyncio.run(run())


class TestSQLiteDatabase:
    def test_save_and_get(self):
        async def scenario(db):
            stored = await db.save_report(make_report())
            return stored, await db.get_report(stored.id)

        stored, loaded = with_database(":memory:", scenario)
        assert stored.id is not None
        assert loaded.command == "dim"
        assert loaded.inputs == {"rank": 2, "weight": [1, 1]}
        assert loaded.outcome == "pass"
        assert loaded.payload["enumerated"] == 9
        assert loaded.payload["checks"][0]["name"] == "dimension"
        assert loaded.wall_time == 0.25
        assert loaded.created_at == stored.created_at

    def test_missing_report(self):
        async def scenario(db):
            return await db.get_report(42)

        assert with_database(":memory:", scenario) is None

    def test_recent_reports_order_and_filter(self):
        async def scenario(db):
            await db.save_report(make_report("dim"))
            await db.save_report(make_report("kostka", passed=False))
            await db.save_report(make_report("dim"))
            return (
                await db.get_recent_reports(),
                await db.get_recent_reports(limit=1),
                await db.get_recent_reports(command="kostka"),
            )

        everything, latest, kostka = with_database(":memory:", scenario)
        assert [r.id for r in everything] == sorted((r.id for r in everything), reverse=True)
        assert [r.command for r in everything] == ["dim", "kostka", "dim"]
        assert len(latest) == 1 and latest[0].id == everything[0].id
        assert [r.outcome for r in kostka] == ["mismatch"]

    def test_file_is_persistent(self, tmp_path):
        path = str(tmp_path / "archive" / "reports.db")

        async def save(db):
            await db.save_report(make_report())

        async def load(db):
            return await db.get_recent_reports()

        with_database(path, save)
        reports = with_database(path, load)
        assert len(reports) == 1
        assert "dim pass" in reports[0].summary
