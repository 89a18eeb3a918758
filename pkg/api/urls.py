from django.urls import path

from api import views

urlpatterns = [
    path('exact/', views.exact, name='exact'),
    path('solve/', views.solve, name='solve'),
    path('moments/', views.moments, name='moments'),
    path('expand/', views.expand, name='expand'),
    path('figure/', views.figure, name='figure'),
    path('verify/', views.verify, name='verify'),
]
