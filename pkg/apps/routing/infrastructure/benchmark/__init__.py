from .instance_format import format_instance, load_benchmark_instance, parse_instance_text, read_instance_file

__all__ = ["format_instance", "load_benchmark_instance", "parse_instance_text", "read_instance_file"]
