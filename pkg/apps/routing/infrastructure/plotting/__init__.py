from .route_plotter import plot_route

__all__ = ["plot_route"]
