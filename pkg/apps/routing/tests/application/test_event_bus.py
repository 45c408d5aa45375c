from routing.application.event_bus import EventBus
from routing.domain.events.dataset_events import BenchmarkImported, DatasetGenerated, DomainEvent


def test_base_class_subscribers_see_every_event():
    bus = EventBus()
    everything, generated = [], []
    bus.subscribe(DomainEvent, everything.append)
    bus.subscribe(DatasetGenerated, generated.append)

    bus.publish_all([DatasetGenerated(aggregate_id="a", n=2), BenchmarkImported(aggregate_id="b")])

    assert [event.aggregate_id for event in everything] == ["a", "b"]
    assert [event.aggregate_id for event in generated] == ["a"]


def test_failing_subscriber_does_not_stop_delivery():
    bus = EventBus()
    seen = []

    def broken(event):
        raise RuntimeError("boom")

    bus.subscribe(DatasetGenerated, broken)
    bus.subscribe(DatasetGenerated, seen.append)
    bus.publish(DatasetGenerated(aggregate_id="a"))

    assert len(seen) == 1


def test_unrelated_subscribers_are_skipped():
    bus = EventBus()
    seen = []
    bus.subscribe(BenchmarkImported, seen.append)

    bus.publish(DatasetGenerated(aggregate_id="a"))

    assert seen == []
